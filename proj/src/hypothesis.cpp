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

#include "projgraph/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace projgraph {

double kolmogorov_survival(double lambda) {
  if (lambda < 0.2) return 1.0;  // 1 - Q(0.2) < 1e-12
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-18) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestResult ks_two_sample(std::span<const double> xs, std::span<const double> ys) {
  if (xs.empty() || ys.empty()) throw std::invalid_argument("KS test needs two nonempty samples");
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(ys.begin(), ys.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    // step both empirical CDFs past the next value, ties included
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  const double root = std::sqrt(ne);
  return TestResult{d, kolmogorov_survival((root + 0.12 + 0.11 / root) * d)};
}

double ks_uniform_distance(std::span<const double> xs) {
  std::vector<double> a(xs.begin(), xs.end());
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = std::clamp(a[i], 0.0, 1.0);
    d = std::max({d, static_cast<double>(i + 1) / n - x, x - static_cast<double>(i) / n});
  }
  return d;
}

double chi_square_survival(double statistic, double dof) {
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

TestResult chi_square_gof(std::span<const std::uint64_t> observed, std::span<const double> expected,
                          std::uint64_t n) {
  if (observed.size() != expected.size() || observed.size() < 2) {
    throw std::invalid_argument("chi-square needs matching observed/expected vectors with >= 2 bins");
  }
  if (std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}) != n) {
    throw std::invalid_argument("observed counts do not sum to N");
  }
  if (std::abs(std::accumulate(expected.begin(), expected.end(), 0.0) - 1.0) > 1e-9) {
    throw std::invalid_argument("expected probabilities do not sum to 1");
  }
  const double total = static_cast<double>(n);
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = total * expected[i];
    if (e < 5.0) throw std::invalid_argument("chi-square bin expected count below 5");
    const double diff = static_cast<double>(observed[i]) - e;
    stat += diff * diff / e;
  }
  return TestResult{stat, chi_square_survival(stat, static_cast<double>(observed.size() - 1))};
}

}  // namespace projgraph
