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

#include "projgraph/point_measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace projgraph {

PairConfiguration::PairConfiguration(std::vector<LabelPair> pairs, bool allow_loops)
    : pairs_(std::move(pairs)), allow_loops_(allow_loops) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  for (const auto& [x, y] : pairs_) {
    if (x.index() != y.index()) throw std::invalid_argument("pair mixes label kinds");
    if (!allow_loops_ && x == y) throw std::invalid_argument("configuration contains a loop");
    if (!std::binary_search(pairs_.begin(), pairs_.end(), LabelPair{y, x})) {
      throw std::invalid_argument("configuration is not symmetric");
    }
  }
}

Graph::Graph(Window window, std::vector<Label> vertices, std::vector<Edge> edges,
             std::vector<double> latents)
    : window_(std::move(window)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      latents_(std::move(latents)) {
  if (!latents_.empty() && latents_.size() != vertices_.size()) {
    throw std::invalid_argument("latent annotations must match the vertex count");
  }
  for (const auto& v : vertices_) {
    if (!window_.contains(v)) throw std::invalid_argument("vertex label outside the graph window");
  }
  std::vector<Label> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate vertex label");
  }
  for (auto& e : edges_) {
    if (e.first >= vertices_.size() || e.second >= vertices_.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.first == e.second) throw std::invalid_argument("self-loop");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("multi-edge");
  }
}

bool Graph::operator==(const Graph& other) const {
  return window_ == other.window_ && vertices_ == other.vertices_ && edges_ == other.edges_ &&
         latents_ == other.latents_;
}

PairConfiguration graph_to_pairs(const Graph& graph) {
  std::vector<LabelPair> pairs;
  pairs.reserve(2 * graph.edge_count());
  const auto& vs = graph.vertices();
  for (const auto& [u, v] : graph.edges()) {
    pairs.emplace_back(vs[u], vs[v]);
    pairs.emplace_back(vs[v], vs[u]);
  }
  return PairConfiguration(std::move(pairs));
}

Graph pairs_to_graph(const PairConfiguration& config, const Window& window) {
  if (config.allows_loops()) {
    for (const auto& [x, y] : config.pairs()) {
      if (x == y) throw std::invalid_argument("graphs cannot carry loops");
    }
  }
  std::vector<Label> vertices;
  for (const auto& [x, y] : config.pairs()) {
    if (!window.contains(x) || !window.contains(y)) {
      throw std::invalid_argument("configuration label outside the window");
    }
    vertices.push_back(x);
  }
  // pairs are sorted by first coordinate, so this is already ordered
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  auto index_of = [&](const Label& l) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), l) -
                                    vertices.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(config.size() / 2);
  for (const auto& [x, y] : config.pairs()) {
    if (x < y) edges.emplace_back(index_of(x), index_of(y));
  }
  return Graph(window, std::move(vertices), std::move(edges));
}

PairConfiguration restrict(const PairConfiguration& config, const Window& window) {
  std::vector<LabelPair> kept;
  for (const auto& p : config.pairs()) {
    if (window.contains(p.first) && window.contains(p.second)) kept.push_back(p);
  }
  return PairConfiguration(std::move(kept), config.allows_loops());
}

Graph restrict(const Graph& graph, const Window& window) {
  const auto& vs = graph.vertices();
  const auto& lat = graph.latents();
  std::vector<std::size_t> remap(vs.size(), vs.size());
  std::vector<Label> vertices;
  std::vector<double> latents;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (window.contains(vs[i])) {
      remap[i] = vertices.size();
      vertices.push_back(vs[i]);
      if (!lat.empty()) latents.push_back(lat[i]);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : graph.edges()) {
    if (remap[u] != vs.size() && remap[v] != vs.size()) edges.emplace_back(remap[u], remap[v]);
  }
  Graph out(window, std::move(vertices), std::move(edges), std::move(latents));
  out.set_fingerprint(graph.fingerprint());
  return out;
}

Graph prune_isolated(const Graph& graph) {
  std::vector<std::size_t> degree(graph.vertex_count(), 0);
  for (const auto& [u, v] : graph.edges()) {
    ++degree[u];
    ++degree[v];
  }
  const auto& vs = graph.vertices();
  const auto& lat = graph.latents();
  std::vector<std::size_t> remap(vs.size(), 0);
  std::vector<Label> vertices;
  std::vector<double> latents;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (degree[i] == 0) continue;
    remap[i] = vertices.size();
    vertices.push_back(vs[i]);
    if (!lat.empty()) latents.push_back(lat[i]);
  }
  std::vector<Edge> edges;
  edges.reserve(graph.edge_count());
  for (const auto& [u, v] : graph.edges()) edges.emplace_back(remap[u], remap[v]);
  Graph out(graph.window(), std::move(vertices), std::move(edges), std::move(latents));
  out.set_fingerprint(graph.fingerprint());
  return out;
}

bool box_contains(const Box& box, const Label& label) {
  if (const auto* r = std::get_if<IntRange>(&box)) {
    const auto* v = std::get_if<std::int64_t>(&label);
    return v && *v >= r->lo && *v <= r->hi;
  }
  if (const auto* r = std::get_if<RealRange>(&box)) {
    const auto* v = std::get_if<double>(&label);
    return v && *v >= r->lo && *v < r->hi;
  }
  const auto& s = std::get<Sector>(box);
  const auto* p = std::get_if<Point>(&label);
  if (!p) return false;
  const double norm = std::sqrt(squared_norm(*p));
  if (norm < s.r_lo || norm >= s.r_hi) return false;
  if (s.direction.empty()) return true;
  if (s.direction.size() != p->size()) throw std::invalid_argument("sector dimension mismatch");
  double dot = 0.0;
  for (std::size_t i = 0; i < p->size(); ++i) dot += (*p)[i] * s.direction[i];
  return dot > s.min_cos * norm;
}

std::size_t count(const PairConfiguration& config, const Box& a, const Box& b) {
  std::size_t n = 0;
  for (const auto& [x, y] : config.pairs()) {
    if (box_contains(a, x) && box_contains(b, y)) ++n;
  }
  return n;
}

std::size_t count_vertices(const Graph& graph, const Box& box) {
  return static_cast<std::size_t>(std::count_if(graph.vertices().begin(), graph.vertices().end(),
                                                [&](const Label& l) { return box_contains(box, l); }));
}

}  // namespace projgraph
