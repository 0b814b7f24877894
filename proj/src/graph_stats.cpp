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

#include "projgraph/graph_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace projgraph {

std::uint64_t count_triangles(const Graph& graph) {
  std::vector<std::vector<std::size_t>> adj(graph.vertex_count());
  for (const auto& [u, v] : graph.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::uint64_t total = 0;
  for (const auto& [u, v] : graph.edges()) {
    // count common neighbours w > v so each triangle u < v < w is seen once
    const auto& a = adj[u];
    const auto& b = adj[v];
    auto i = std::upper_bound(a.begin(), a.end(), v);
    auto j = std::upper_bound(b.begin(), b.end(), v);
    while (i != a.end() && j != b.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++total;
        ++i;
        ++j;
      }
    }
  }
  return total;
}

GraphStats graph_stats(const Graph& graph) {
  GraphStats s;
  s.edge_count = graph.edge_count();
  s.degrees.assign(graph.vertex_count(), 0);
  for (const auto& [u, v] : graph.edges()) {
    ++s.degrees[u];
    ++s.degrees[v];
  }
  s.degree_histogram.assign(kDegreeHistogramCap + 2, 0);
  for (auto d : s.degrees) {
    ++s.degree_histogram[std::min(d, kDegreeHistogramCap + 1)];
    s.max_degree = std::max(s.max_degree, d);
  }
  s.triangle_count = count_triangles(graph);
  return s;
}

std::uint64_t labeled_bitmask(const Graph& graph, std::int64_t n) {
  if (n < 1 || n > 11) throw std::invalid_argument("labeled bitmask needs 1 <= n <= 11");
  auto pair_index = [n](std::int64_t i, std::int64_t j) {
    // pairs (a, b) with a < i come first
    std::int64_t before = 0;
    for (std::int64_t a = 1; a < i; ++a) before += n - a;
    return before + (j - i - 1);
  };
  std::uint64_t mask = 0;
  const auto& vs = graph.vertices();
  for (const auto& [u, v] : graph.edges()) {
    const auto a = std::get<std::int64_t>(vs[u]);
    const auto b = std::get<std::int64_t>(vs[v]);
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("vertex outside [n]");
    mask |= std::uint64_t{1} << pair_index(std::min(a, b), std::max(a, b));
  }
  return mask;
}

}  // namespace projgraph
