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

// Goodness-of-fit tests used by the certification harness.

#include <cstdint>
#include <span>
#include <vector>

namespace projgraph {

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_survival(double lambda);

// Two-sided two-sample Kolmogorov-Smirnov test. The p-value uses the
// asymptotic Kolmogorov distribution at (sqrt(ne) + 0.12 + 0.11 / sqrt(ne)) D
// with ne = |xs| |ys| / (|xs| + |ys|). Throws on empty input.
TestResult ks_two_sample(std::span<const double> xs, std::span<const double> ys);

// One-sample KS distance of the sample from U[0, 1).
double ks_uniform_distance(std::span<const double> xs);

// Pearson chi-square goodness of fit with (bins - 1) degrees of freedom.
// Throws std::invalid_argument unless sum(observed) == n, expected sums to 1
// (within 1e-9) and n * min(expected) >= 5.
TestResult chi_square_gof(std::span<const std::uint64_t> observed, std::span<const double> expected,
                          std::uint64_t n);

// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, double dof);

}  // namespace projgraph
