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

// Symmetry groups acting on label spaces.
//
//   Permutation      finite permutations of [n], acting on integer labels
//   DyadicSwapWord   finite words of dyadic interval swaps, acting on R_+
//   Rotation         SO(d), acting on points of R^d
//
// Dyadic intervals are I_{j,k} = ((j-1)/2^k, j/2^k]. The swap theta_{i,j,k}
// translates I_{i,k} onto I_{j,k} and back and fixes everything else. A word
// applies its swaps left to right.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "projgraph/coin.hpp"
#include "projgraph/label_space.hpp"
#include "projgraph/point_measure.hpp"

namespace projgraph {

// Real labels produced by the library lie on this dyadic grid, on which
// every swap with k <= kLabelGridBits is exact in double precision (for
// labels below 2^(52 - kLabelGridBits)).
inline constexpr int kLabelGridBits = 40;

struct Permutation {
  // image[i - 1] = g(i) for i in [n]
  std::vector<std::int64_t> image;
};

struct DyadicSwap {
  std::int64_t i;
  std::int64_t j;
  int k;
  bool operator==(const DyadicSwap&) const = default;
};

struct DyadicSwapWord {
  std::vector<DyadicSwap> swaps;
};

struct Rotation {
  Eigen::MatrixXd matrix;
};

class GroupElement {
 public:
  // Validating factories.
  static GroupElement permutation(std::vector<std::int64_t> image);
  static GroupElement identity_permutation(std::int64_t n);
  static GroupElement transposition(std::int64_t n, std::int64_t a, std::int64_t b);
  static GroupElement dyadic(std::vector<DyadicSwap> swaps);
  static GroupElement rotation(Eigen::MatrixXd matrix);
  static GroupElement identity_rotation(int dim);

  bool is_permutation() const { return std::holds_alternative<Permutation>(value_); }
  bool is_dyadic() const { return std::holds_alternative<DyadicSwapWord>(value_); }
  bool is_rotation() const { return std::holds_alternative<Rotation>(value_); }

  const Permutation& as_permutation() const { return std::get<Permutation>(value_); }
  const DyadicSwapWord& as_dyadic() const { return std::get<DyadicSwapWord>(value_); }
  const Rotation& as_rotation() const { return std::get<Rotation>(value_); }

 private:
  using Value = std::variant<Permutation, DyadicSwapWord, Rotation>;
  explicit GroupElement(Value v) : value_(std::move(v)) {}
  Value value_;
};

// Interval index j with x in ((j-1)/2^k, j/2^k]; 0 for x <= 0.
std::int64_t dyadic_index(double x, int k);

// Throws std::invalid_argument on variant mismatch.
Label apply_label(const GroupElement& g, const Label& label);
PairConfiguration apply_pairs(const GroupElement& g, const PairConfiguration& config);
// Relabels vertices; edges, latents and fingerprint follow their vertices.
// The image must stay inside the graph's window.
Graph apply_graph(const GroupElement& g, const Graph& graph);

// Canonical embedding of an element acting on window_n into the group of
// window_m: permutations are padded with fixed points, swap words and
// rotations are returned unchanged (after checking their support).
GroupElement extend_element(const GroupElement& g, const Window& window_n, const Window& window_m);

// apply_label(compose(g, h), x) == apply_label(g, apply_label(h, x)).
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// perm:[..] | dyadic:[(i,j,k),...] | rot:d=<d>;rows=...
std::string to_string(const GroupElement& g);

enum class GeneratorFamily { Transpositions, DyadicSwaps, RandomRotations };

std::string to_string(GeneratorFamily family);

// Generator sets driving the invariance tests. `identity_only` replaces every
// draw by the identity of the family's group, which is useful as a control.
struct GeneratorSet {
  GeneratorFamily family;
  double n = 1.0;   // Transpositions: [n]; DyadicSwaps: [0, n)
  int k_max = 1;    // DyadicSwaps only
  int dim = 2;      // RandomRotations only
  bool identity_only = false;

  static GeneratorSet transpositions(std::int64_t n);
  static GeneratorSet dyadic_swaps(double n, int k_max);
  static GeneratorSet random_rotations(int dim);
};

// Transpositions: uniform over the n(n-1)/2 transpositions of [n].
// DyadicSwaps: k uniform over the levels 0..k_max that hold at least two
// intervals inside [0, n), then a uniform unordered pair of those intervals.
// RandomRotations: Haar measure on SO(d).
GroupElement sample_generator(const GeneratorSet& set, CoinStream& rng);

// Haar-distributed rotation from QR of a Gaussian matrix, with the sign and
// determinant corrections.
Eigen::MatrixXd haar_rotation(int dim, CoinStream& rng);

}  // namespace projgraph
