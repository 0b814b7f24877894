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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "projgraph/point_measure.hpp"

namespace projgraph {

// Degrees above this value share the overflow bin of degree_histogram.
inline constexpr std::size_t kDegreeHistogramCap = 20;

struct GraphStats {
  std::size_t edge_count = 0;
  std::vector<std::size_t> degrees;           // per vertex, in vertex order
  std::vector<std::size_t> degree_histogram;  // bins 0..20, then one overflow bin
  std::uint64_t triangle_count = 0;
  std::size_t max_degree = 0;
};

GraphStats graph_stats(const Graph& graph);

// Triangles by intersecting sorted adjacency lists along each edge.
std::uint64_t count_triangles(const Graph& graph);

// Edge-presence bitmask over the pairs (i, j), i < j, of a graph on [n]
// taken in lexicographic order; bit 0 is (1, 2). Requires n <= 11.
std::uint64_t labeled_bitmask(const Graph& graph, std::int64_t n);

}  // namespace projgraph
