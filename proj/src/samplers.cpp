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

#include "projgraph/samplers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "projgraph/coin.hpp"
#include "projgraph/symmetry.hpp"

namespace projgraph {
namespace {

struct RawVertex {
  Label label;
  double latent;
  std::array<std::uint64_t, 3> key;
  std::size_t key_size;
};

double snap_to_grid(double u) { return std::ldexp(std::floor(std::ldexp(u, kLabelGridBits)), -kLabelGridBits); }

// Sorts vertices by label and remaps the edges accordingly.
Graph assemble(const Window& window, std::vector<RawVertex> raw, std::vector<Edge> edges,
               std::uint64_t fingerprint) {
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw[a].label < raw[b].label; });
  std::vector<std::size_t> position(raw.size());
  std::vector<Label> vertices;
  std::vector<double> latents;
  vertices.reserve(raw.size());
  latents.reserve(raw.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    position[order[r]] = r;
    if (r > 0 && raw[order[r]].label == raw[order[r - 1]].label) {
      throw std::runtime_error("label collision between two sampled points");
    }
    vertices.push_back(std::move(raw[order[r]].label));
    latents.push_back(raw[order[r]].latent);
  }
  for (auto& [u, v] : edges) {
    u = position[u];
    v = position[v];
  }
  Graph g(window, std::move(vertices), std::move(edges), std::move(latents));
  g.set_fingerprint(fingerprint);
  return g;
}

template <class Weight>
std::vector<Edge> draw_edges(const CoinPRF& prf, const std::vector<RawVertex>& vs, Weight weight) {
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < vs.size(); ++p) {
    const std::span<const std::uint64_t> kp(vs[p].key.data(), vs[p].key_size);
    for (std::size_t q = p + 1; q < vs.size(); ++q) {
      const double w = weight(p, q);
      if (w <= 0.0) continue;
      const std::span<const std::uint64_t> kq(vs[q].key.data(), vs[q].key_size);
      if (prf.pair_uniform("edge", kp, kq) < w) edges.emplace_back(p, q);
    }
  }
  return edges;
}

void require_family(const FamilySpec& spec, Family family) {
  if (spec.family != family) {
    throw std::invalid_argument("spec describes a " + to_string(spec.family) + " family, not " + to_string(family));
  }
  spec.validate();
}

double shell_rate(const PointSpec& points, std::uint64_t shell) {
  if (const auto* r = std::get_if<PoissonRate>(&points)) return r->rate;
  const auto& rates = std::get<RadialDensity>(points).shell_rates;
  return rates[std::min<std::size_t>(shell, rates.size() - 1)];
}

}  // namespace

Graph sample_graphon(const FamilySpec& spec, std::int64_t n) {
  require_family(spec, Family::Graphon);
  const Window window = Window::integer_prefix(n);
  const CoinPRF prf(spec.seed);
  const bool scaled = std::holds_alternative<kernel::WindowScaled>(spec.kernel);

  std::vector<RawVertex> raw;
  raw.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto id = static_cast<std::uint64_t>(i);
    const double x = scaled ? static_cast<double>(i) / static_cast<double>(n) : prf.uniform("lat", {id});
    raw.push_back(RawVertex{Label{i}, x, {id, 0, 0}, 1});
  }
  auto edges = draw_edges(prf, raw, [&](std::size_t p, std::size_t q) {
    return graphon_weight(spec.kernel, raw[p].latent, raw[q].latent);
  });
  return assemble(window, std::move(raw), std::move(edges), spec.fingerprint());
}

Graph sample_graphex(const FamilySpec& spec, double n) {
  require_family(spec, Family::Graphex);
  const Window window = Window::real_interval(n);
  const CoinPRF prf(spec.seed);
  const auto columns = static_cast<std::uint64_t>(std::ceil(n));
  const auto rows = static_cast<std::uint64_t>(std::ceil(spec.y_max));

  std::vector<RawVertex> raw;
  for (std::uint64_t a = 0; a < columns; ++a) {
    for (std::uint64_t b = 0; b < rows; ++b) {
      const std::uint64_t points = poisson_quantile(1.0, prf.uniform("cnt", {a, b}));
      for (std::uint64_t idx = 0; idx < points; ++idx) {
        const double x = static_cast<double>(a) + snap_to_grid(prf.uniform("pos", {a, b, idx, 0}));
        const double y = static_cast<double>(b) + prf.uniform("pos", {a, b, idx, 1});
        if (y >= spec.y_max || !window.contains(Label{x})) continue;
        raw.push_back(RawVertex{Label{x}, y, {a, b, idx}, 3});
      }
    }
  }
  auto edges = draw_edges(prf, raw, [&](std::size_t p, std::size_t q) {
    return graphex_weight(spec.kernel, raw[p].latent, raw[q].latent);
  });
  return prune_isolated(assemble(window, std::move(raw), std::move(edges), spec.fingerprint()));
}

Graph sample_rotinv(const FamilySpec& spec, double n) {
  require_family(spec, Family::RotInvariant);
  const Window window = Window::ball(spec.dim, n);
  const CoinPRF prf(spec.seed);
  const double unit_volume = unit_ball_volume(spec.dim);
  const auto d = static_cast<std::uint64_t>(spec.dim);
  // shell floor(n) may hold points that round inside the ball
  const auto shells = static_cast<std::uint64_t>(std::floor(n)) + 1;

  std::vector<RawVertex> raw;
  std::vector<PolarPoint> polar;
  for (std::uint64_t s = 0; s < shells; ++s) {
    const std::uint64_t points = poisson_quantile(shell_rate(spec.points, s), prf.uniform("cnt", {s}));
    for (std::uint64_t idx = 0; idx < points; ++idx) {
      const double volume = static_cast<double>(s) + prf.uniform("vol", {s, idx});
      const double r = std::pow(volume / unit_volume, 1.0 / spec.dim);
      Point dir(d);
      double norm2 = 0.0;
      for (std::uint64_t c = 0; c < d; ++c) {
        dir[c] = box_muller(prf.uniform("dir", {s, idx, 2 * c}), prf.uniform("dir", {s, idx, 2 * c + 1}));
        norm2 += dir[c] * dir[c];
      }
      if (norm2 == 0.0) {
        dir[0] = 1.0;
        norm2 = 1.0;
      }
      const double scale = r / std::sqrt(norm2);
      for (double& c : dir) c *= scale;
      Label label{dir};
      if (!window.contains(label)) continue;
      polar.push_back(to_polar(std::get<Point>(label)));
      raw.push_back(RawVertex{std::move(label), r, {s, idx, 0}, 2});
    }
  }
  auto edges = draw_edges(prf, raw, [&](std::size_t p, std::size_t q) {
    return geometric_weight(spec.kernel, polar[p], polar[q]);
  });
  return assemble(window, std::move(raw), std::move(edges), spec.fingerprint());
}

Graph sample(const FamilySpec& spec, double n) {
  switch (spec.family) {
    case Family::Graphon: {
      if (!(n >= 1.0) || std::floor(n) != n) throw std::invalid_argument("graphon window size must be a positive integer");
      return sample_graphon(spec, static_cast<std::int64_t>(n));
    }
    case Family::Graphex:
      return sample_graphex(spec, n);
    case Family::RotInvariant:
      return sample_rotinv(spec, n);
  }
  throw std::logic_error("unhandled family");
}

Graph restrict_sample(const FamilySpec& spec, const Graph& graph, double n) {
  Graph small = restrict(graph, spec.window(n));
  return spec.family == Family::Graphex ? prune_isolated(small) : small;
}

Graph extend_sample(const FamilySpec& spec, const Graph& graph, double n, double m) {
  if (!(n <= m)) throw std::invalid_argument("extension target must not be smaller than the source window");
  if (!graph.fingerprint() || *graph.fingerprint() != spec.fingerprint()) {
    throw std::invalid_argument("graph fingerprint does not match the family spec");
  }
  if (!(graph.window() == spec.window(n))) throw std::invalid_argument("graph window does not match size n");
  Graph big = sample(spec, m);
  if (!(restrict_sample(spec, big, n) == graph)) {
    throw std::invalid_argument("graph content does not match its recorded family spec");
  }
  return big;
}

}  // namespace projgraph
