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

#pragma once

// Certification of projectivity and invariance for sampled graph families.
//
// Projectivity has two modes. The exact mode samples at m and at n with the
// same seed and requires the restriction of the large sample to reproduce
// the small one bit for bit. The distributional mode uses independent seeds
// and compares graph statistics with two-sample KS tests.
//
// Invariance compares label-dependent statistics of a sample against the
// same statistics after a random generator of the family's symmetry group
// has acted on it. Compatibility checks that embedding a group element into
// a larger window commutes with restriction.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "projgraph/family_spec.hpp"
#include "projgraph/hypothesis.hpp"
#include "projgraph/symmetry.hpp"

namespace projgraph {

enum class Verdict { Pass, Fail };

std::string to_string(Verdict v);

struct TestReport {
  std::string test_name;
  std::uint64_t fingerprint = 0;
  std::uint64_t trials = 0;  // N
  double n = 0.0;
  std::optional<double> m;
  std::vector<std::string> statistics;
  std::vector<double> p_values;  // parallel to statistics, uncorrected
  Verdict verdict = Verdict::Pass;
  double alpha = 0.01;
  std::uint64_t seed = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const { return verdict == Verdict::Pass; }

  // Bonferroni over the statistics: min(1, k * p).
  std::vector<double> corrected_p_values() const;

  // Sets verdict = Pass iff every corrected p-value is >= alpha.
  void decide();

  nlohmann::ordered_json to_json() const;
  std::string to_json_text() const;
};

enum class ProjectivityMode { Exact, Distributional, Both };

ProjectivityMode projectivity_mode_from_string(const std::string& name);

// n < m, N >= 500.
TestReport test_projectivity(const FamilySpec& spec, double n, double m, std::uint64_t trials, double alpha,
                             ProjectivityMode mode = ProjectivityMode::Both);

// The generator family must match the spec: transpositions for graphons,
// dyadic swaps for graphexes and random rotations for rotinv.
TestReport test_invariance(const FamilySpec& spec, const GeneratorSet& generators, double n, std::uint64_t trials,
                           double alpha);

// Generators are drawn at level n (the set's own size parameter is ignored).
TestReport test_compatibility(const GeneratorSet& generators, double n, double m, std::uint64_t trials,
                              std::uint64_t seed = 0);

// Generator set matching the family's symmetry group at window size n.
GeneratorSet default_generators(const FamilySpec& spec, double n, int k_max = 3);

struct LabeledDistribution {
  std::int64_t n = 0;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> counts;  // indexed by labeled_bitmask
  std::vector<double> exact;          // exact probability of each bitmask
};

// Empirical histogram of N graphon samples over the 2^(n(n-1)/2) labeled
// graphs on [n], next to the exact probabilities. n <= 5.
LabeledDistribution enumerate_labeled_distribution(const FamilySpec& spec, std::int64_t n, std::uint64_t samples);

// Exact probabilities alone (closed form for constant and window-scaled
// kernels, integration over the latent grid for grid graphons).
std::vector<double> exact_labeled_probabilities(const FamilySpec& spec, std::int64_t n);

// Chi-square of the empirical histogram against the exact vector. Bins with
// expected count below 5 are pooled into one bin.
TestResult labeled_chi_square(const LabeledDistribution& dist);

}  // namespace projgraph
