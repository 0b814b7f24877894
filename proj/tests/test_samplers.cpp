// Copyright 2026 The projgraph Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "projgraph/coin.hpp"
#include "projgraph/samplers.hpp"

using namespace projgraph;

namespace {

FamilySpec graphon(Kernel k, std::uint64_t seed = 1) {
  FamilySpec s;
  s.family = Family::Graphon;
  s.kernel = std::move(k);
  s.seed = seed;
  return s;
}

FamilySpec graphex(Kernel k, double y_max, std::uint64_t seed = 1) {
  FamilySpec s;
  s.family = Family::Graphex;
  s.kernel = std::move(k);
  s.y_max = y_max;
  s.seed = seed;
  return s;
}

FamilySpec rotinv(Kernel k, double rate, int dim = 2, std::uint64_t seed = 1) {
  FamilySpec s;
  s.family = Family::RotInvariant;
  s.kernel = std::move(k);
  s.points = PoissonRate{rate};
  s.dim = dim;
  s.seed = seed;
  return s;
}

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

template <class F>
Moments monte_carlo(int runs, F draw) {
  double sum = 0.0;
  double sum2 = 0.0;
  for (int r = 0; r < runs; ++r) {
    const double x = draw(r);
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / runs;
  const double var = (sum2 - runs * mean * mean) / (runs - 1);
  return {mean, std::sqrt(var / runs)};
}

bool within_3se(const Moments& a, const Moments& b) {
  return std::abs(a.mean - b.mean) <= 3.0 * std::hypot(a.se, b.se);
}

}  // namespace

TEST_CASE("graphon degenerate kernels") {
  const Graph g = sample(graphon(kernel::Constant{1.0}), 2);
  CHECK(g.vertex_count() == 2);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0] == Edge{0, 1});
  for (std::int64_t n : {1, 5, 30}) CHECK(sample(graphon(kernel::Constant{0.0}), static_cast<double>(n)).edge_count() == 0);
  CHECK(sample(graphon(kernel::Constant{1.0}), 7).edge_count() == 21);
  CHECK_THROWS_AS(sample(graphon(kernel::Constant{0.5}), 2.5), std::invalid_argument);
}

TEST_CASE("graphon edge frequency") {
  // grid graphon: both latents in the first half connect w.p. 0.8, else 0.1
  const Kernel grid = kernel::GraphonGrid{{{0.8, 0.1}, {0.1, 0.1}}};
  const double p = 0.25 * 0.8 + 0.75 * 0.1;
  const Moments m = monte_carlo(4000, [&](int r) { return static_cast<double>(sample(graphon(grid, 1000 + r), 6).edge_count()); });
  CHECK(std::abs(m.mean - 15.0 * p) <= 3.0 * m.se);
}

TEST_CASE("graphex sample shape") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FamilySpec spec = graphex(kernel::Indicator{0.7}, 2.0, seed);
    const Graph g = sample(spec, 3.5);
    CHECK(g.window() == Window::real_interval(3.5));
    REQUIRE(g.latents().size() == g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      const double x = std::get<double>(g.vertices()[i]);
      CHECK(x >= 0.0);
      CHECK(x < 3.5);
      CHECK(g.latents()[i] < 2.0);
    }
    // isolated vertices are pruned
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& [a, b] : g.edges()) ++deg[a], ++deg[b];
    for (int d : deg) CHECK(d > 0);
  }
  CHECK(sample(graphex(kernel::Constant{0.0}, 2.0), 5).vertex_count() == 0);
}

TEST_CASE("graphex indicator edge count against a brute-force oracle") {
  const double c = 0.5;
  const double n = 3.0;
  const double y_max = 1.0;
  const Moments sampled = monte_carlo(5000, [&](int r) {
    return static_cast<double>(sample(graphex(kernel::Indicator{c}, y_max, 5000 + r), n).edge_count());
  });

  // independent simulation: Poisson(n y_max) points uniform on the strip,
  // every pair with both latents below c is an edge
  std::mt19937_64 rng(77);
  std::poisson_distribution<int> count(n * y_max);
  std::uniform_real_distribution<double> latent(0.0, y_max);
  const Moments oracle = monte_carlo(50000, [&](int) {
    const int k = count(rng);
    int low = 0;
    for (int i = 0; i < k; ++i) low += latent(rng) < c ? 1 : 0;
    return 0.5 * low * (low - 1);
  });
  CHECK(within_3se(sampled, oracle));
  CHECK(std::abs(oracle.mean - 0.5 * (n * c) * (n * c)) <= 3.0 * oracle.se);
}

TEST_CASE("rotinv sample shape") {
  const FamilySpec spec = rotinv(kernel::HardDistance{0.5}, 2.0, 3, 9);
  const Graph g = sample(spec, 6.0);
  CHECK(g.window() == Window::ball(3, 6.0));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Point& p = std::get<Point>(g.vertices()[i]);
    CHECK(p.size() == 3);
    CHECK(std::sqrt(squared_norm(p)) == doctest::Approx(g.latents()[i]).epsilon(1e-12));
  }
  for (const auto& [a, b] : g.edges()) {
    const Point& p = std::get<Point>(g.vertices()[a]);
    const Point& q = std::get<Point>(g.vertices()[b]);
    double d2 = 0.0;
    for (int k = 0; k < 3; ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
    CHECK(std::sqrt(d2) <= 0.5);
  }
  CHECK(sample(rotinv(kernel::Constant{0.0}, 3.0), 5).edge_count() == 0);
}

TEST_CASE("rotinv point and edge moments") {
  const double lambda = 2.0;
  const double n = 3.0;
  const double p = 0.4;
  const Moments points = monte_carlo(3000, [&](int r) {
    return static_cast<double>(sample(rotinv(kernel::Constant{p}, lambda, 2, 300 + r), n).vertex_count());
  });
  CHECK(std::abs(points.mean - lambda * n) <= 3.0 * points.se);
  // E[k(k-1)] = (lambda n)^2 for Poisson k
  const Moments edges = monte_carlo(3000, [&](int r) {
    return static_cast<double>(sample(rotinv(kernel::Constant{p}, lambda, 2, 300 + r), n).edge_count());
  });
  CHECK(std::abs(edges.mean - p * (lambda * n) * (lambda * n) / 2.0) <= 3.0 * edges.se);
}

TEST_CASE("rotinv radial density") {
  FamilySpec spec = rotinv(kernel::Constant{0.0}, 1.0, 2);
  spec.points = RadialDensity{{3.0, 0.5}};
  // shells beyond the table reuse the last rate
  const Moments m = monte_carlo(3000, [&](int r) {
    spec.seed = 40000 + r;
    return static_cast<double>(sample(spec, 3.0).vertex_count());
  });
  CHECK(std::abs(m.mean - 4.0) <= 3.0 * m.se);
  const Moments inner = monte_carlo(3000, [&](int r) {
    spec.seed = 40000 + r;
    return static_cast<double>(restrict(sample(spec, 3.0), Window::ball(2, 1.0)).vertex_count());
  });
  CHECK(std::abs(inner.mean - 3.0) <= 3.0 * inner.se);
}

TEST_CASE("rotinv interior mean degree") {
  const double lambda = 3.0;
  const double r0 = 0.3;
  const double volume = 50.0;
  const double cutoff = ball_radius(2, volume) - r0;
  std::vector<double> degree_sums;
  std::vector<double> interior;
  for (int r = 0; r < 300; ++r) {
    const Graph g = sample(rotinv(kernel::HardDistance{r0}, lambda, 2, 7000 + r), volume);
    std::vector<double> deg(g.vertex_count(), 0.0);
    for (const auto& [a, b] : g.edges()) deg[a] += 1, deg[b] += 1;
    double s = 0.0;
    double c = 0.0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      if (g.latents()[i] < cutoff) s += deg[i], c += 1;
    }
    degree_sums.push_back(s);
    interior.push_back(c);
  }
  double sd = 0.0;
  double sc = 0.0;
  for (std::size_t i = 0; i < interior.size(); ++i) sd += degree_sums[i], sc += interior[i];
  const double ratio = sd / sc;
  double resid = 0.0;
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const double e = degree_sums[i] - ratio * interior[i];
    resid += e * e;
  }
  const double runs = static_cast<double>(interior.size());
  const double se = std::sqrt(resid / (runs - 1)) / (sc / runs) / std::sqrt(runs);
  CHECK(std::abs(ratio - lambda * std::numbers::pi * r0 * r0) <= 3.0 * se);
}

TEST_CASE("geometric kernel values") {
  CHECK(hyperbolic_distance(1.0, 0.4, 0.0) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(hyperbolic_distance(1.0, 0.4, std::numbers::pi) == doctest::Approx(1.4).epsilon(1e-12));
  const PolarPoint a = to_polar({0.5, 0.0});
  const PolarPoint b = to_polar({0.0, 0.25});
  CHECK(angular_distance(a, b) == doctest::Approx(std::numbers::pi / 2));
  CHECK(geometric_weight(kernel::SoftDistance{1.0, 2.0}, a, b) == doctest::Approx(std::exp(-0.3125)));
  CHECK(geometric_weight(kernel::RadialSum{0.75}, a, b) == 1.0);
  CHECK(geometric_weight(kernel::RadialSum{0.7}, a, b) == 0.0);
  CHECK(geometric_weight(kernel::HyperbolicSoft{hyperbolic_distance(0.5, 0.25, std::numbers::pi / 2), 0.3}, a, b) ==
        doctest::Approx(0.5));
  CHECK(geometric_weight(kernel::FixedDirection{}, a, b) == 0.0);
}

TEST_CASE("restriction of a large sample is the small sample") {
  const FamilySpec specs[] = {
      graphon(kernel::GraphonGrid{{{0.9, 0.2}, {0.2, 0.5}}}),
      graphex(kernel::Product{1.0}, 3.0),
      graphex(kernel::Indicator{1.5}, 2.0),
      rotinv(kernel::SoftDistance{0.5, 1.5}, 2.5, 3),
      rotinv(kernel::HyperbolicSoft{2.0, 0.5}, 4.0, 2),
  };
  for (FamilySpec spec : specs) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      spec.seed = seed;
      const Graph small = sample(spec, 3);
      CHECK(restrict_sample(spec, sample(spec, 9), 3) == small);
      CHECK(restrict_sample(spec, sample(spec, 5), 3) == small);
    }
  }
}

TEST_CASE("extend") {
  FamilySpec spec = graphon(kernel::Constant{0.5}, 31);
  const Graph g5 = sample(spec, 5);
  const Graph g9 = extend_sample(spec, g5, 5, 9);
  CHECK(g9 == sample(spec, 9));
  CHECK(restrict_sample(spec, g9, 5) == g5);
  CHECK(extend_sample(spec, g5, 5, 5) == g5);

  const FamilySpec ex = graphex(kernel::Indicator{0.6}, 1.0, 8);
  const Graph e2 = sample(ex, 2.0);
  const Graph e6 = extend_sample(ex, e2, 2.0, 6.0);
  CHECK(graph_to_pairs(e2) == restrict(graph_to_pairs(e6), Window::real_interval(2.0)));

  CHECK_THROWS_AS(extend_sample(spec, g5, 5, 4), std::invalid_argument);
  FamilySpec other = spec;
  other.seed = 32;
  CHECK_THROWS_AS(extend_sample(other, g5, 5, 9), std::invalid_argument);
  Graph tampered(g5.window(), g5.vertices(), {}, g5.latents());
  tampered.set_fingerprint(g5.fingerprint());
  if (g5.edge_count() > 0) CHECK_THROWS_AS(extend_sample(spec, tampered, 5, 9), std::invalid_argument);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(graphon(kernel::Indicator{0.5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(graphex(kernel::Indicator{2.5}, 2.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(graphon(kernel::Constant{1.5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(graphon(kernel::GraphonGrid{{{0.1, 0.2}, {0.3, 0.1}}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(rotinv(kernel::HardDistance{0.1}, 1.0, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(rotinv(kernel::HardDistance{0.1}, 1000.0).validate(), std::invalid_argument);
  FamilySpec bad_rate = graphex(kernel::Indicator{0.5}, 1.0);
  bad_rate.points = PoissonRate{2.0};
  CHECK_THROWS_AS(bad_rate.validate(), std::invalid_argument);
  CHECK(graphex(kernel::Product{0.5}, 2.0).truncated());
  CHECK(graphon(kernel::Constant{0.5}, 1).fingerprint() != graphon(kernel::Constant{0.5}, 2).fingerprint());
  CHECK(graphon(kernel::Constant{0.5}, 1).fingerprint() == graphon(kernel::Constant{0.5}, 1).fingerprint());
}
