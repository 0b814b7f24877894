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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "projgraph/edge_list.hpp"
#include "projgraph/point_measure.hpp"

using namespace projgraph;

namespace {

Label L(std::int64_t i) { return Label{i}; }

// path 1-2 plus the triangle 2-3-4
Graph path_and_triangle() {
  return Graph(Window::integer_prefix(4), {L(1), L(2), L(3), L(4)}, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
}

}  // namespace

TEST_CASE("graph to pairs") {
  const PairConfiguration c = graph_to_pairs(path_and_triangle());
  const PairConfiguration expected({{L(1), L(2)}, {L(2), L(1)}, {L(2), L(3)}, {L(3), L(2)},
                                    {L(3), L(4)}, {L(4), L(3)}, {L(4), L(2)}, {L(2), L(4)}});
  CHECK(c.size() == 8);
  CHECK(c == expected);
  CHECK(pairs_to_graph(c, Window::integer_prefix(4)) == path_and_triangle());
}

TEST_CASE("pairs of small graphs") {
  CHECK(graph_to_pairs(Graph(Window::integer_prefix(3), {}, {})).empty());
  const Graph g(Window::real_interval(2), {Label{0.3}, Label{1.7}}, {{0, 1}});
  CHECK(graph_to_pairs(g) == PairConfiguration({{Label{0.3}, Label{1.7}}, {Label{1.7}, Label{0.3}}}));

  const Graph h = pairs_to_graph(PairConfiguration({{L(1), L(2)}, {L(2), L(1)}}), Window::integer_prefix(5));
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(pairs_to_graph(PairConfiguration(), Window::integer_prefix(5)).vertex_count() == 0);
}

TEST_CASE("pair configuration validation") {
  CHECK_THROWS_AS(PairConfiguration({{L(1), L(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(PairConfiguration({{L(1), L(1)}}), std::invalid_argument);
  CHECK_NOTHROW(PairConfiguration({{L(1), L(1)}}, true));
  CHECK_THROWS_AS(PairConfiguration({{L(1), Label{2.0}}, {Label{2.0}, L(1)}}), std::invalid_argument);
  // duplicates collapse
  CHECK(PairConfiguration({{L(1), L(2)}, {L(2), L(1)}, {L(1), L(2)}}).size() == 2);
}

TEST_CASE("graph validation") {
  const Window w = Window::integer_prefix(3);
  CHECK_THROWS_AS(Graph(w, {L(1), L(1)}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(w, {L(4)}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(w, {L(1), L(2)}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(w, {L(1), L(2)}, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(w, {L(1), L(2)}, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(w, {L(1), L(2)}, {}, {0.5}), std::invalid_argument);
}

TEST_CASE("restrict") {
  const PairConfiguration pt = graph_to_pairs(path_and_triangle());
  CHECK(restrict(pt, Window::integer_prefix(3)) ==
        PairConfiguration({{L(1), L(2)}, {L(2), L(1)}, {L(2), L(3)}, {L(3), L(2)}}));
  CHECK(restrict(pt, Window::integer_prefix(4)) == pt);
  const PairConfiguration real({{Label{0.5}, Label{2.5}}, {Label{2.5}, Label{0.5}}});
  CHECK(restrict(real, Window::real_interval(2)).empty());

  const Graph g3 = restrict(path_and_triangle(), Window::integer_prefix(3));
  CHECK(g3.vertex_count() == 3);
  CHECK(g3.edge_count() == 2);
  CHECK(restrict(path_and_triangle(), Window::integer_prefix(1)).edge_count() == 0);
  CHECK(restrict(path_and_triangle(), Window::integer_prefix(1)).vertex_count() == 1);
}

TEST_CASE("restrict composes along nested windows") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<LabelPair> pairs;
    for (int e = 0; e < 20; ++e) {
      const double a = u(rng);
      const double b = u(rng);
      pairs.push_back({Label{a}, Label{b}});
      pairs.push_back({Label{b}, Label{a}});
    }
    const PairConfiguration c(pairs);
    const Window w3 = Window::real_interval(3);
    const Window w6 = Window::real_interval(6);
    CHECK(restrict(restrict(c, w6), w3) == restrict(c, w3));
  }
}

TEST_CASE("count over boxes") {
  const PairConfiguration pt = graph_to_pairs(path_and_triangle());
  CHECK(count(pt, IntRange{2, 2}, IntRange{1, 4}) == 3);
  CHECK(count(PairConfiguration(), IntRange{1, 4}, IntRange{1, 4}) == 0);
  CHECK(count(pt, IntRange{1, 4}, IntRange{1, 4}) == 2 * path_and_triangle().edge_count());
  CHECK(count(pt, IntRange{1, 1}, IntRange{3, 4}) == 0);

  const Graph g(Window::real_interval(4), {Label{0.5}, Label{1.0}, Label{3.9}}, {});
  CHECK(count_vertices(g, RealRange{0.0, 1.0}) == 1);
  CHECK(count_vertices(g, RealRange{0.0, 4.0}) == 3);

  const Sector right{0.0, 10.0, Point{1.0, 0.0}, 0.0};
  CHECK(box_contains(right, Label{Point{1.0, 0.5}}));
  CHECK_FALSE(box_contains(right, Label{Point{-1.0, 0.5}}));
}

TEST_CASE("prune isolated") {
  const Graph g(Window::integer_prefix(5), {L(1), L(2), L(3), L(5)}, {{1, 3}});
  const Graph p = prune_isolated(g);
  CHECK(p.vertex_count() == 2);
  CHECK(p.edge_count() == 1);
  CHECK(pairs_to_graph(graph_to_pairs(g), g.window()) == p);
}

TEST_CASE("edge list round trip") {
  Graph g(Window::ball(3, 2.0), {Label{Point{0.1, -0.2, 0.3}}, Label{Point{0.0, 0.1, 1.0 / 3.0}}}, {{0, 1}},
          {0.25, 0.125});
  g.set_fingerprint(0x0123456789abcdefULL);
  const std::string text = to_edge_list(g, {{"n", "2"}});
  const EdgeListDocument doc = parse_edge_list(text);
  CHECK(doc.graph == g);
  CHECK(doc.graph.fingerprint() == g.fingerprint());
  REQUIRE(doc.find("n") != nullptr);
  CHECK(*doc.find("n") == "2");
  CHECK(to_edge_list(doc.graph, doc.metadata) == text);

  const Graph f = path_and_triangle();
  CHECK(parse_edge_list(to_edge_list(f)).graph == f);
  const Graph r(Window::real_interval(2.5), {Label{0.1}, Label{2.4999999999999996}}, {{0, 1}}, {0.3, 1.9});
  CHECK(parse_edge_list(to_edge_list(r)).graph == r);
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(parse_edge_list("v 1 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("#window kind=integer_prefix size=3\nv 1 1\ne 1 2\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("#window kind=integer_prefix size=3\nv 1 7\n"), std::exception);
  CHECK_THROWS_AS(parse_edge_list("#window kind=integer_prefix size=3\nx\n"), std::runtime_error);
}
