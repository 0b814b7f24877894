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

#include "projgraph/certification.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

#include "projgraph/coin.hpp"
#include "projgraph/graph_stats.hpp"
#include "projgraph/point_measure.hpp"
#include "projgraph/samplers.hpp"

namespace projgraph {
namespace {

// Seed streams, so that no two roles share randomness.
constexpr std::uint64_t kExactStream = 0;
constexpr std::uint64_t kSmallArmStream = 1;
constexpr std::uint64_t kLargeArmStream = 2;
constexpr std::uint64_t kInvarianceSampleStream = 3;
constexpr std::uint64_t kInvarianceGeneratorStream = 4;
constexpr std::uint64_t kCompatibilityStream = 5;
constexpr std::uint64_t kEnumerateStream = 6;

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

FamilySpec with_seed(const FamilySpec& spec, std::uint64_t seed) {
  FamilySpec s = spec;
  s.seed = seed;
  return s;
}

// Label-dependent statistic of a configuration together with its vertex set.
struct LabelledStatistic {
  std::string name;
  std::function<double(const PairConfiguration&, const std::vector<Label>&)> eval;
};

double vertices_in(const std::vector<Label>& vs, const Box& box) {
  return static_cast<double>(std::count_if(vs.begin(), vs.end(), [&](const Label& l) { return box_contains(box, l); }));
}

std::vector<LabelledStatistic> invariance_statistics(const FamilySpec& spec, double n) {
  switch (spec.family) {
    case Family::Graphon: {
      const auto top = static_cast<std::int64_t>(n);
      return {
          {"degree_vertex_1",
           [top](const PairConfiguration& c, const std::vector<Label>&) {
             return static_cast<double>(count(c, IntRange{1, 1}, IntRange{1, top}));
           }},
          {"edge_1_2",
           [](const PairConfiguration& c, const std::vector<Label>&) {
             return static_cast<double>(count(c, IntRange{1, 1}, IntRange{2, 2}));
           }},
      };
    }
    case Family::Graphex: {
      const Box a = RealRange{0.0, n / 4};
      const Box b = RealRange{n / 2, 3 * n / 4};
      return {
          {"vertices_in_A", [a](const PairConfiguration&, const std::vector<Label>& vs) { return vertices_in(vs, a); }},
          {"edges_A_A",
           [a](const PairConfiguration& c, const std::vector<Label>&) { return static_cast<double>(count(c, a, a) / 2); }},
          {"edges_A_B",
           [a, b](const PairConfiguration& c, const std::vector<Label>&) { return static_cast<double>(count(c, a, b)); }},
      };
    }
    case Family::RotInvariant: {
      const double radius = spec.window(n).radius();
      Point e1(static_cast<std::size_t>(spec.dim), 0.0);
      e1[0] = 1.0;
      Point minus_e1 = e1;
      minus_e1[0] = -1.0;
      const Box half = Sector{0.0, radius, e1, 0.0};
      const Box other = Sector{0.0, radius, minus_e1, 0.0};
      return {
          {"points_in_half",
           [half](const PairConfiguration&, const std::vector<Label>& vs) { return vertices_in(vs, half); }},
          {"edges_half_half",
           [half](const PairConfiguration& c, const std::vector<Label>&) {
             return static_cast<double>(count(c, half, half) / 2);
           }},
          {"edges_half_other",
           [half, other](const PairConfiguration& c, const std::vector<Label>&) {
             return static_cast<double>(count(c, half, other));
           }},
      };
    }
  }
  throw std::logic_error("unhandled family");
}

bool generators_match(Family family, GeneratorFamily generators) {
  switch (family) {
    case Family::Graphon:
      return generators == GeneratorFamily::Transpositions;
    case Family::Graphex:
      return generators == GeneratorFamily::DyadicSwaps;
    case Family::RotInvariant:
      return generators == GeneratorFamily::RandomRotations;
  }
  return false;
}

Window window_for(const GeneratorSet& set, double size) {
  switch (set.family) {
    case GeneratorFamily::Transpositions:
      return make_window(WindowKind::IntegerPrefix, size);
    case GeneratorFamily::DyadicSwaps:
      return make_window(WindowKind::RealInterval, size);
    case GeneratorFamily::RandomRotations:
      return make_window(WindowKind::EuclideanBall, size, set.dim);
  }
  throw std::logic_error("unhandled generator family");
}

// Uniform label in the window (on the dyadic grid for real windows).
Label random_label(const Window& w, CoinStream& rng) {
  switch (w.kind()) {
    case WindowKind::IntegerPrefix:
      return static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(w.size()))) + 1;
    case WindowKind::RealInterval: {
      const double x = std::ldexp(std::floor(std::ldexp(rng.uniform() * w.size(), kLabelGridBits)), -kLabelGridBits);
      return std::min(x, std::nextafter(w.size(), 0.0));
    }
    case WindowKind::EuclideanBall: {
      const double volume = rng.uniform() * w.size();
      const double r = std::pow(volume / unit_ball_volume(w.dim()), 1.0 / w.dim());
      Point p(static_cast<std::size_t>(w.dim()));
      double norm2 = 0.0;
      for (double& c : p) {
        c = rng.normal();
        norm2 += c * c;
      }
      const double scale = norm2 > 0.0 ? r / std::sqrt(norm2) : 0.0;
      for (double& c : p) c *= scale;
      return p;
    }
  }
  throw std::logic_error("unhandled window kind");
}

std::vector<double> exact_grid(const kernel::GraphonGrid& grid, std::int64_t n) {
  const std::size_t cells = grid.values.size();
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const std::size_t masks = std::size_t{1} << pairs.size();
  std::vector<double> total(masks, 0.0);
  std::vector<double> dist(masks);
  std::vector<std::size_t> cell(static_cast<std::size_t>(n), 0);
  const double weight = std::pow(static_cast<double>(cells), -static_cast<double>(n));
  for (;;) {
    std::fill(dist.begin(), dist.end(), 0.0);
    dist[0] = 1.0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      const double w = grid.values[cell[pairs[e].first]][cell[pairs[e].second]];
      const std::size_t bit = std::size_t{1} << e;
      for (std::size_t mask = 0; mask < bit; ++mask) {
        dist[mask | bit] = dist[mask] * w;
        dist[mask] *= 1.0 - w;
      }
    }
    for (std::size_t mask = 0; mask < masks; ++mask) total[mask] += weight * dist[mask];
    // next assignment of latent cells, odometer style
    std::size_t pos = 0;
    while (pos < cell.size() && ++cell[pos] == cells) cell[pos++] = 0;
    if (pos == cell.size()) break;
  }
  return total;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Pass ? "Pass" : "Fail"; }

std::vector<double> TestReport::corrected_p_values() const {
  std::vector<double> out;
  const double k = static_cast<double>(p_values.size());
  for (double p : p_values) out.push_back(std::min(1.0, k * p));
  return out;
}

void TestReport::decide() {
  const auto corrected = corrected_p_values();
  verdict = std::all_of(corrected.begin(), corrected.end(), [this](double p) { return p >= alpha; }) ? Verdict::Pass
                                                                                                     : Verdict::Fail;
}

nlohmann::ordered_json TestReport::to_json() const {
  nlohmann::ordered_json j;
  j["test_name"] = test_name;
  j["family_fingerprint"] = hex(fingerprint);
  j["sample_sizes"] = {{"N", trials}, {"n", n}};
  if (m) j["sample_sizes"]["m"] = *m;
  j["statistics"] = statistics;
  nlohmann::ordered_json raw = nlohmann::ordered_json::object();
  nlohmann::ordered_json corrected = nlohmann::ordered_json::object();
  const auto corr = corrected_p_values();
  for (std::size_t i = 0; i < statistics.size(); ++i) {
    raw[statistics[i]] = p_values[i];
    corrected[statistics[i]] = corr[i];
  }
  j["p_values"] = raw;
  j["corrected_p_values"] = corrected;
  j["verdict"] = to_string(verdict);
  j["alpha"] = alpha;
  j["seeds"] = {{"base", seed}, {"derivation", "mix64(mix64(base ^ mix64(stream)) ^ trial)"}};
  j["details"] = details;
  return j;
}

std::string TestReport::to_json_text() const { return to_json().dump(2) + "\n"; }

ProjectivityMode projectivity_mode_from_string(const std::string& name) {
  if (name == "exact") return ProjectivityMode::Exact;
  if (name == "distributional") return ProjectivityMode::Distributional;
  if (name == "both") return ProjectivityMode::Both;
  throw std::invalid_argument("unknown projectivity mode '" + name + "'");
}

TestReport test_projectivity(const FamilySpec& spec, double n, double m, std::uint64_t trials, double alpha,
                             ProjectivityMode mode) {
  spec.validate();
  if (!(n < m)) throw std::invalid_argument("projectivity test needs n < m");
  if (trials < 500) throw std::invalid_argument("projectivity test needs N >= 500");
  spec.window(n);  // rejects sizes the family cannot use
  spec.window(m);

  TestReport report;
  report.test_name = "projectivity";
  report.fingerprint = spec.fingerprint();
  report.trials = trials;
  report.n = n;
  report.m = m;
  report.alpha = alpha;
  report.seed = spec.seed;
  report.details["mode"] = mode == ProjectivityMode::Exact ? "exact"
                           : mode == ProjectivityMode::Distributional ? "distributional"
                                                                      : "both";
  if (spec.truncated()) report.details["latent_truncation"] = spec.y_max;

  if (mode != ProjectivityMode::Distributional) {
    std::uint64_t mismatches = 0;
    std::uint64_t edge_mismatches = 0;
    nlohmann::ordered_json first = nullptr;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const FamilySpec s = with_seed(spec, derive_seed(spec.seed, kExactStream, t));
      const Graph small = sample(s, n);
      const Graph restricted = restrict_sample(s, sample(s, m), n);
      const bool edges_equal = graph_to_pairs(small) == graph_to_pairs(restricted);
      if (!edges_equal) ++edge_mismatches;
      if (!edges_equal || !(small == restricted)) {
        ++mismatches;
        if (first.is_null()) first = {{"trial", t}, {"seed", s.seed}};
      }
    }
    report.statistics.push_back("exact_mismatches");
    report.p_values.push_back(mismatches == 0 ? 1.0 : 0.0);
    report.details["exact_mismatches"] = mismatches;
    report.details["edge_configuration_mismatches"] = edge_mismatches;
    if (!first.is_null()) report.details["first_mismatch"] = first;
  }

  if (mode != ProjectivityMode::Exact) {
    std::vector<double> edges[2], max_deg[2], triangles[2];
    std::vector<std::uint64_t> degree_hist[2];
    for (auto& h : degree_hist) h.assign(kDegreeHistogramCap + 2, 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
      const Graph direct = sample(with_seed(spec, derive_seed(spec.seed, kSmallArmStream, t)), n);
      const FamilySpec big_spec = with_seed(spec, derive_seed(spec.seed, kLargeArmStream, t));
      const Graph restricted = restrict_sample(big_spec, sample(big_spec, m), n);
      const Graph* arms[2] = {&direct, &restricted};
      for (int a = 0; a < 2; ++a) {
        const GraphStats st = graph_stats(*arms[a]);
        edges[a].push_back(static_cast<double>(st.edge_count));
        max_deg[a].push_back(static_cast<double>(st.max_degree));
        triangles[a].push_back(static_cast<double>(st.triangle_count));
        for (std::size_t b = 0; b < st.degree_histogram.size(); ++b) degree_hist[a][b] += st.degree_histogram[b];
      }
    }
    const std::pair<const char*, std::vector<double>*> stats[] = {
        {"edge_count", edges}, {"max_degree", max_deg}, {"triangle_count", triangles}};
    for (const auto& [name, arms] : stats) {
      const TestResult r = ks_two_sample(arms[0], arms[1]);
      report.statistics.push_back(name);
      report.p_values.push_back(r.p_value);
      report.details["ks_statistic"][name] = r.statistic;
    }
    report.details["degree_histogram"] = {{"direct_n", degree_hist[0]}, {"restricted_m_to_n", degree_hist[1]}};
  }
  report.decide();
  return report;
}

GeneratorSet default_generators(const FamilySpec& spec, double n, int k_max) {
  switch (spec.family) {
    case Family::Graphon:
      return GeneratorSet::transpositions(static_cast<std::int64_t>(n));
    case Family::Graphex:
      return GeneratorSet::dyadic_swaps(n, k_max);
    case Family::RotInvariant:
      return GeneratorSet::random_rotations(spec.dim);
  }
  throw std::logic_error("unhandled family");
}

TestReport test_invariance(const FamilySpec& spec, const GeneratorSet& generators, double n, std::uint64_t trials,
                           double alpha) {
  spec.validate();
  if (!generators_match(spec.family, generators.family)) {
    throw std::invalid_argument("generator set " + to_string(generators.family) + " does not match the " +
                                to_string(spec.family) + " family");
  }
  if (generators.family != GeneratorFamily::RandomRotations && generators.n > n) {
    throw std::invalid_argument("generator support exceeds the window");
  }
  if (generators.family == GeneratorFamily::RandomRotations && generators.dim != spec.dim) {
    throw std::invalid_argument("rotation dimension does not match the family");
  }
  if (trials == 0) throw std::invalid_argument("invariance test needs at least one trial");

  const auto stats = invariance_statistics(spec, n);
  std::vector<std::vector<double>> before(stats.size()), after(stats.size());
  CoinStream rng(spec.seed, kInvarianceGeneratorStream);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Graph g = sample(with_seed(spec, derive_seed(spec.seed, kInvarianceSampleStream, t)), n);
    const GroupElement element = sample_generator(generators, rng);
    const PairConfiguration config = graph_to_pairs(g);
    const PairConfiguration moved = apply_pairs(element, config);
    std::vector<Label> moved_vertices;
    moved_vertices.reserve(g.vertex_count());
    for (const auto& v : g.vertices()) moved_vertices.push_back(apply_label(element, v));
    for (std::size_t s = 0; s < stats.size(); ++s) {
      before[s].push_back(stats[s].eval(config, g.vertices()));
      after[s].push_back(stats[s].eval(moved, moved_vertices));
    }
  }

  TestReport report;
  report.test_name = "invariance";
  report.fingerprint = spec.fingerprint();
  report.trials = trials;
  report.n = n;
  report.alpha = alpha;
  report.seed = spec.seed;
  report.details["generators"] = to_string(generators.family);
  if (generators.family == GeneratorFamily::DyadicSwaps) report.details["k_max"] = generators.k_max;
  if (generators.identity_only) report.details["identity_only"] = true;
  if (spec.truncated()) report.details["latent_truncation"] = spec.y_max;
  for (std::size_t s = 0; s < stats.size(); ++s) {
    const TestResult r = ks_two_sample(before[s], after[s]);
    report.statistics.push_back(stats[s].name);
    report.p_values.push_back(r.p_value);
    report.details["ks_statistic"][stats[s].name] = r.statistic;
    double mb = 0.0, ma = 0.0;
    for (double v : before[s]) mb += v;
    for (double v : after[s]) ma += v;
    report.details["mean_before"][stats[s].name] = mb / static_cast<double>(trials);
    report.details["mean_after"][stats[s].name] = ma / static_cast<double>(trials);
  }
  report.decide();
  return report;
}

TestReport test_compatibility(const GeneratorSet& generators, double n, double m, std::uint64_t trials,
                              std::uint64_t seed) {
  if (!(n <= m)) throw std::invalid_argument("compatibility test needs n <= m");
  const Window small = window_for(generators, n);
  const Window large = window_for(generators, m);
  GeneratorSet level_n = generators;
  level_n.n = n;

  CoinStream rng(seed, kCompatibilityStream);
  std::uint64_t label_mismatches = 0;
  std::uint64_t fixed_point_mismatches = 0;
  std::uint64_t restriction_mismatches = 0;
  constexpr int kLabelsPerConfig = 6;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const GroupElement g = sample_generator(level_n, rng);
    const GroupElement lifted = extend_element(g, small, large);

    const Label x = random_label(small, rng);
    if (!(apply_label(lifted, x) == apply_label(g, x))) ++label_mismatches;

    // embedded elements fix everything outside the small window (rotations
    // act on the whole space and are exempt)
    if (generators.family != GeneratorFamily::RandomRotations) {
      const Label y = random_label(large, rng);
      if (!small.contains(y) && !(apply_label(lifted, y) == y)) ++fixed_point_mismatches;
    }

    std::vector<Label> labels;
    for (int i = 0; i < kLabelsPerConfig; ++i) {
      Label l = random_label(i % 2 == 0 ? small : large, rng);
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(std::move(l));
    }
    std::vector<LabelPair> pairs;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        if (rng.uniform() < 0.5) {
          pairs.emplace_back(labels[i], labels[j]);
          pairs.emplace_back(labels[j], labels[i]);
        }
      }
    }
    const PairConfiguration config(std::move(pairs));
    if (!(restrict(apply_pairs(lifted, config), small) == apply_pairs(g, restrict(config, small)))) {
      ++restriction_mismatches;
    }
  }

  TestReport report;
  report.test_name = "compatibility";
  report.trials = trials;
  report.n = n;
  report.m = m;
  report.seed = seed;
  report.statistics = {"embedding_mismatches", "fixed_point_mismatches", "restriction_mismatches"};
  report.p_values = {label_mismatches == 0 ? 1.0 : 0.0, fixed_point_mismatches == 0 ? 1.0 : 0.0,
                     restriction_mismatches == 0 ? 1.0 : 0.0};
  report.details["generators"] = to_string(generators.family);
  report.details["embedding_mismatches"] = label_mismatches;
  report.details["fixed_point_mismatches"] = fixed_point_mismatches;
  report.details["restriction_mismatches"] = restriction_mismatches;
  report.decide();
  return report;
}

std::vector<double> exact_labeled_probabilities(const FamilySpec& spec, std::int64_t n) {
  spec.validate();
  if (spec.family != Family::Graphon) throw std::invalid_argument("labeled enumeration is for graphons only");
  if (n < 1 || n > 5) throw std::invalid_argument("labeled enumeration needs 1 <= n <= 5");
  if (const auto* grid = std::get_if<kernel::GraphonGrid>(&spec.kernel)) return exact_grid(*grid, n);

  // deterministic-latent kernels: one latent assignment with weight 1
  std::vector<double> latents(static_cast<std::size_t>(n));
  const bool scaled = std::holds_alternative<kernel::WindowScaled>(spec.kernel);
  for (std::int64_t i = 0; i < n; ++i) latents[i] = scaled ? static_cast<double>(i + 1) / static_cast<double>(n) : 0.5;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const std::size_t masks = std::size_t{1} << pairs.size();
  std::vector<double> probs(masks);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    double p = 1.0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      const double w = graphon_weight(spec.kernel, latents[pairs[e].first], latents[pairs[e].second]);
      p *= (mask >> e) & 1 ? w : 1.0 - w;
    }
    probs[mask] = p;
  }
  return probs;
}

LabeledDistribution enumerate_labeled_distribution(const FamilySpec& spec, std::int64_t n, std::uint64_t samples) {
  LabeledDistribution dist;
  dist.n = n;
  dist.samples = samples;
  dist.exact = exact_labeled_probabilities(spec, n);
  dist.counts.assign(dist.exact.size(), 0);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const Graph g = sample_graphon(with_seed(spec, derive_seed(spec.seed, kEnumerateStream, t)), n);
    ++dist.counts[labeled_bitmask(g, n)];
  }
  return dist;
}

TestResult labeled_chi_square(const LabeledDistribution& dist) {
  const double total = static_cast<double>(dist.samples);
  std::vector<std::uint64_t> observed;
  std::vector<double> expected;
  std::uint64_t pooled_count = 0;
  double pooled_prob = 0.0;
  for (std::size_t i = 0; i < dist.exact.size(); ++i) {
    if (total * dist.exact[i] >= 5.0) {
      observed.push_back(dist.counts[i]);
      expected.push_back(dist.exact[i]);
    } else {
      pooled_count += dist.counts[i];
      pooled_prob += dist.exact[i];
    }
  }
  if (pooled_prob > 0.0) {
    if (total * pooled_prob >= 5.0) {
      observed.push_back(pooled_count);
      expected.push_back(pooled_prob);
    } else if (pooled_count > 0) {
      // mass the exact law gives almost no weight to was observed anyway
      return TestResult{std::numeric_limits<double>::infinity(), 0.0};
    }
  }
  if (observed.size() < 2) return TestResult{0.0, 1.0};
  // renormalise after dropping a negligible pooled tail
  double sum = 0.0;
  for (double e : expected) sum += e;
  for (double& e : expected) e /= sum;
  std::uint64_t n = 0;
  for (auto o : observed) n += o;
  return chi_square_gof(observed, expected, n);
}

}  // namespace projgraph
