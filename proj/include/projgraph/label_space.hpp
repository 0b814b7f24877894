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

// Label spaces and their exhausting window sequences.
//
// Three label spaces are supported:
//   - the positive integers, exhausted by prefixes [n] = {1, ..., n};
//   - the half line R_+, exhausted by half-open intervals [0, n);
//   - R^d (d >= 2), exhausted by open origin-centred balls of volume n.
//
// Labels are globally typed, so the inclusion of a smaller window into a
// larger one is the identity on label values; nesting is observable only
// through `Window::contains`.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace projgraph {

using Point = std::vector<double>;

// integer (>= 1) | nonnegative real | point in R^d
using Label = std::variant<std::int64_t, double, Point>;

enum class WindowKind { IntegerPrefix, RealInterval, EuclideanBall };

std::string to_string(WindowKind kind);
WindowKind window_kind_from_string(const std::string& name);

// Lebesgue volume of the unit ball in R^dim.
double unit_ball_volume(int dim);

// Radius of the dim-ball with the given volume.
double ball_radius(int dim, double volume);

class Window {
 public:
  static Window integer_prefix(std::int64_t n);
  static Window real_interval(double n);
  static Window ball(int dim, double volume);

  WindowKind kind() const { return kind_; }
  double size() const { return size_; }
  // Zero unless kind() == EuclideanBall.
  int dim() const { return dim_; }
  // Radius of the ball; only meaningful for EuclideanBall.
  double radius() const { return radius_; }

  // Throws std::invalid_argument if the label variant does not match kind().
  bool contains(const Label& label) const;

  // Same kind and dimension, different size.
  Window resized(double size) const;

  // True iff both windows have the same kind/dim and this one is not larger.
  bool nested_in(const Window& other) const;

  bool operator==(const Window& other) const = default;

 private:
  Window(WindowKind kind, double size, int dim, double radius)
      : kind_(kind), size_(size), dim_(dim), radius_(radius) {}

  WindowKind kind_;
  double size_;
  int dim_;
  double radius_;
};

// Validating constructor: dim must be given iff kind is EuclideanBall.
Window make_window(WindowKind kind, double size, std::optional<int> dim = std::nullopt);

// Name of the label alternative, for error messages.
std::string label_kind_name(const Label& label);

double squared_norm(const Point& p);

}  // namespace projgraph
