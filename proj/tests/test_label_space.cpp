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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "projgraph/label_space.hpp"

using namespace projgraph;

TEST_CASE("window construction") {
  const Window w4 = make_window(WindowKind::IntegerPrefix, 4);
  CHECK(w4.kind() == WindowKind::IntegerPrefix);
  CHECK(w4.size() == 4);
  for (std::int64_t i = 1; i <= 4; ++i) CHECK(w4.contains(Label{i}));
  CHECK_FALSE(w4.contains(Label{std::int64_t{0}}));

  const Window r = make_window(WindowKind::RealInterval, 3.5);
  CHECK(r.contains(Label{0.0}));
  CHECK(r.contains(Label{3.4999}));
  CHECK_FALSE(r.contains(Label{3.5}));

  const Window disk = make_window(WindowKind::EuclideanBall, std::numbers::pi, 2);
  CHECK(disk.radius() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(make_window(WindowKind::IntegerPrefix, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(make_window(WindowKind::IntegerPrefix, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_window(WindowKind::RealInterval, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_window(WindowKind::EuclideanBall, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_window(WindowKind::EuclideanBall, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_window(WindowKind::RealInterval, 1.0, 2), std::invalid_argument);
}

TEST_CASE("contains") {
  const Window w4 = Window::integer_prefix(4);
  CHECK(w4.contains(Label{std::int64_t{4}}));
  CHECK_FALSE(w4.contains(Label{std::int64_t{5}}));
  CHECK_FALSE(Window::real_interval(3).contains(Label{3.0}));
  CHECK_FALSE(Window::ball(2, std::numbers::pi).contains(Label{Point{1.0, 0.0}}));
  CHECK(Window::ball(2, std::numbers::pi).contains(Label{Point{0.999, 0.0}}));

  CHECK_THROWS_AS(w4.contains(Label{0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Window::real_interval(3).contains(Label{Point{0.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Window::ball(3, 1.0).contains(Label{Point{0.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("ball radius") {
  CHECK(ball_radius(2, std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ball_radius(3, 4.0 * std::numbers::pi / 3.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ball_radius(2, 4.0 * std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-14));
  // V_4 = pi^2 / 2
  CHECK(unit_ball_volume(4) == doctest::Approx(std::numbers::pi * std::numbers::pi / 2.0).epsilon(1e-14));
}

TEST_CASE("nesting") {
  for (double n : {1.0, 2.5, 7.0}) {
    const Window small = Window::real_interval(n);
    const Window big = Window::real_interval(n + 1.5);
    CHECK(small.nested_in(big));
    CHECK_FALSE(big.nested_in(small));
    for (double x = 0.0; x < n; x += 0.125) CHECK(big.contains(Label{x}));
  }
  const Window b = Window::ball(3, 2.0);
  CHECK(b.nested_in(Window::ball(3, 5.0)));
  CHECK_FALSE(b.nested_in(Window::ball(2, 5.0)));
  CHECK(b.resized(5.0) == Window::ball(3, 5.0));
}
