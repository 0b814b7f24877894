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

// Counter-based coins.
//
// A CoinPRF maps (seed, tag, key...) to a uniform variate in [0, 1) with no
// internal state, so the same structural coordinate always sees the same
// randomness no matter how large the sampled window is. Samplers key every
// draw by absolute coordinates (vertex id, cell index, shell index), which
// is what makes samples of different window sizes restriction-consistent.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

namespace projgraph {

// 64-bit finaliser from SplitMix64; a bijection on uint64.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a over bytes.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis = 0xcbf29ce484222325ULL);

// Seed of the run-th trial derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t run);

class CoinPRF {
 public:
  explicit CoinPRF(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(std::string_view tag, std::span<const std::uint64_t> key) const;

  double uniform(std::string_view tag, std::span<const std::uint64_t> key) const;
  double uniform(std::string_view tag, std::initializer_list<std::uint64_t> key) const {
    return uniform(tag, std::span<const std::uint64_t>(key.begin(), key.size()));
  }

  // Coin for an unordered pair of composite keys: the two keys are put in
  // lexicographic order first, so pair_uniform(t, a, b) == pair_uniform(t, b, a).
  double pair_uniform(std::string_view tag, std::span<const std::uint64_t> a,
                      std::span<const std::uint64_t> b) const;
  double pair_uniform(std::string_view tag, std::uint64_t a, std::uint64_t b) const {
    return pair_uniform(tag, std::span<const std::uint64_t>(&a, 1), std::span<const std::uint64_t>(&b, 1));
  }

 private:
  std::uint64_t seed_;
};

// Top 53 bits of a word as a double in [0, 1).
double to_unit(std::uint64_t bits);

// Sequential stream over a CoinPRF: the i-th draw is the coin keyed by
// (stream, i). Used where randomness does not need to be coupled to
// structure (generator sampling, test harness trials).
class CoinStream {
 public:
  using result_type = std::uint64_t;

  CoinStream(std::uint64_t seed, std::uint64_t stream) : prf_(seed), stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  double uniform();
  // Standard normal via Box-Muller.
  double normal();
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  CoinPRF prf_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

// Smallest k with F(k) > u for the Poisson(rate) distribution; rate <= 700.
std::uint64_t poisson_quantile(double rate, double u);

// Standard normal from two independent uniforms in [0, 1).
double box_muller(double u1, double u2);

}  // namespace projgraph
