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

#include "projgraph/coin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace projgraph {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t absorb(std::uint64_t h, std::uint64_t word, std::uint64_t position) {
  return mix64(h ^ mix64(word + kGolden * (position + 1)));
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t run) {
  return mix64(mix64(base ^ mix64(stream)) ^ run);
}

double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

std::uint64_t CoinPRF::bits(std::string_view tag, std::span<const std::uint64_t> key) const {
  std::uint64_t h = mix64(seed_ ^ fnv1a64(tag));
  for (std::size_t i = 0; i < key.size(); ++i) h = absorb(h, key[i], i);
  return mix64(h ^ key.size());
}

double CoinPRF::uniform(std::string_view tag, std::span<const std::uint64_t> key) const {
  return to_unit(bits(tag, key));
}

double CoinPRF::pair_uniform(std::string_view tag, std::span<const std::uint64_t> a,
                             std::span<const std::uint64_t> b) const {
  const bool swap = std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  const auto first = swap ? b : a;
  const auto second = swap ? a : b;
  const std::size_t total = first.size() + second.size() + 1;
  std::array<std::uint64_t, 16> local{};
  std::vector<std::uint64_t> heap;
  std::uint64_t* key = local.data();
  if (total > local.size()) {
    heap.resize(total);
    key = heap.data();
  }
  std::copy(first.begin(), first.end(), key);
  // separator keeps (1,2 | 3) and (1 | 2,3) apart
  key[first.size()] = first.size();
  std::copy(second.begin(), second.end(), key + first.size() + 1);
  return uniform(tag, std::span<const std::uint64_t>(key, total));
}

CoinStream::result_type CoinStream::operator()() {
  const std::uint64_t key[2] = {stream_, counter_++};
  return prf_.bits("stream", key);
}

double CoinStream::uniform() { return to_unit((*this)()); }

double CoinStream::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return box_muller(u1, u2);
}

std::uint64_t CoinStream::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  // rejection keeps the result exactly uniform
  const std::uint64_t limit = max() - max() % n;
  for (;;) {
    const std::uint64_t r = (*this)();
    if (r < limit) return r % n;
  }
}

double box_muller(double u1, double u2) {
  return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t poisson_quantile(double rate, double u) {
  if (!(rate >= 0.0) || rate > 700.0) throw std::invalid_argument("Poisson rate must lie in [0, 700]");
  if (rate == 0.0) return 0;
  double p = std::exp(-rate);
  double cdf = p;
  std::uint64_t k = 0;
  const auto cap = static_cast<std::uint64_t>(rate + 40.0 * std::sqrt(rate) + 100.0);
  while (u >= cdf && k < cap) {
    ++k;
    p *= rate / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

}  // namespace projgraph
