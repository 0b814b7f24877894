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

// Finite symmetric counting measures on L x L and their graph duals.
//
// A graph G with labelled vertices corresponds to the configuration
// xi^G holding (x, y) and (y, x) for every edge {x, y}. Restriction to a
// window keeps the pairs with both coordinates inside it, which is the
// projection from a larger window to a smaller one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "projgraph/label_space.hpp"

namespace projgraph {

using LabelPair = std::pair<Label, Label>;

class PairConfiguration {
 public:
  PairConfiguration() = default;

  // Sorts and deduplicates. Throws std::invalid_argument if the pairs are
  // not symmetric, or contain a loop (x, x) while allow_loops is false.
  explicit PairConfiguration(std::vector<LabelPair> pairs, bool allow_loops = false);

  const std::vector<LabelPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool allows_loops() const { return allow_loops_; }

  bool operator==(const PairConfiguration& other) const { return pairs_ == other.pairs_; }

 private:
  std::vector<LabelPair> pairs_;
  bool allow_loops_ = false;
};

// Unordered edge between vertex indices, stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

class Graph {
 public:
  // Vertices must be distinct and inside `window`; edges index valid
  // vertices, have no self-loops and no duplicates (either orientation).
  // Edges are normalised to (min, max) and sorted. `latents` is either
  // empty or holds one sampler annotation per vertex.
  Graph(Window window, std::vector<Label> vertices, std::vector<Edge> edges,
        std::vector<double> latents = {});

  const Window& window() const { return window_; }
  const std::vector<Label>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& latents() const { return latents_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Hash of the generating family and seed, when the graph came from a sampler.
  std::optional<std::uint64_t> fingerprint() const { return fingerprint_; }
  void set_fingerprint(std::optional<std::uint64_t> fp) { fingerprint_ = fp; }

  bool operator==(const Graph& other) const;

 private:
  Window window_;
  std::vector<Label> vertices_;
  std::vector<Edge> edges_;
  std::vector<double> latents_;
  std::optional<std::uint64_t> fingerprint_;
};

PairConfiguration graph_to_pairs(const Graph& graph);

// Isolated vertices cannot be recovered from a configuration. Vertices come
// out in label order.
Graph pairs_to_graph(const PairConfiguration& config, const Window& window);

PairConfiguration restrict(const PairConfiguration& config, const Window& window);

// Graph-level restriction: keeps every vertex inside `window` (isolated
// ones included) and the edges among them. The result carries `window`.
Graph restrict(const Graph& graph, const Window& window);

// Drops zero-degree vertices.
Graph prune_isolated(const Graph& graph);

// Measurable regions used by the evaluation maps.
struct IntRange {
  std::int64_t lo;  // inclusive
  std::int64_t hi;  // inclusive
};
struct RealRange {
  double lo;  // inclusive
  double hi;  // exclusive
};
// Points with r_lo <= |x| < r_hi and, when `direction` is non-empty,
// <x, direction> > min_cos * |x| (direction is expected to be a unit vector).
struct Sector {
  double r_lo = 0.0;
  double r_hi = 0.0;
  Point direction;
  double min_cos = -1.0;
};
using Box = std::variant<IntRange, RealRange, Sector>;

bool box_contains(const Box& box, const Label& label);

// Number of pairs (x, y) in the configuration with x in a and y in b.
std::size_t count(const PairConfiguration& config, const Box& a, const Box& b);

// Number of vertices of the graph with label in the box.
std::size_t count_vertices(const Graph& graph, const Box& box);

}  // namespace projgraph
