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

#include "projgraph/label_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace projgraph {

std::string to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::IntegerPrefix:
      return "integer_prefix";
    case WindowKind::RealInterval:
      return "real_interval";
    case WindowKind::EuclideanBall:
      return "euclidean_ball";
  }
  return "unknown";
}

WindowKind window_kind_from_string(const std::string& name) {
  if (name == "integer_prefix") return WindowKind::IntegerPrefix;
  if (name == "real_interval") return WindowKind::RealInterval;
  if (name == "euclidean_ball") return WindowKind::EuclideanBall;
  throw std::invalid_argument("unknown window kind '" + name + "'");
}

double unit_ball_volume(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  const double half = 0.5 * dim;
  return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0));
}

double ball_radius(int dim, double volume) {
  if (dim < 2) throw std::invalid_argument("ball dimension must be >= 2");
  if (!(volume > 0.0)) throw std::invalid_argument("ball volume must be positive");
  return std::pow(volume / unit_ball_volume(dim), 1.0 / dim);
}

Window Window::integer_prefix(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("integer prefix size must be positive");
  return Window(WindowKind::IntegerPrefix, static_cast<double>(n), 0, 0.0);
}

Window Window::real_interval(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("interval size must be positive and finite");
  }
  return Window(WindowKind::RealInterval, n, 0, 0.0);
}

Window Window::ball(int dim, double volume) {
  if (dim < 2) throw std::invalid_argument("ball dimension must be >= 2");
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    throw std::invalid_argument("ball volume must be positive and finite");
  }
  return Window(WindowKind::EuclideanBall, volume, dim, ball_radius(dim, volume));
}

Window make_window(WindowKind kind, double size, std::optional<int> dim) {
  if (kind == WindowKind::EuclideanBall) {
    if (!dim) throw std::invalid_argument("ball window requires a dimension");
    return Window::ball(*dim, size);
  }
  if (dim) throw std::invalid_argument("dimension is only valid for ball windows");
  if (kind == WindowKind::IntegerPrefix) {
    if (!(size > 0.0) || std::floor(size) != size) {
      throw std::invalid_argument("integer prefix size must be a positive integer");
    }
    return Window::integer_prefix(static_cast<std::int64_t>(size));
  }
  return Window::real_interval(size);
}

std::string label_kind_name(const Label& label) {
  switch (label.index()) {
    case 0:
      return "integer";
    case 1:
      return "real";
    default:
      return "point";
  }
}

double squared_norm(const Point& p) {
  double s = 0.0;
  for (double c : p) s += c * c;
  return s;
}

bool Window::contains(const Label& label) const {
  switch (kind_) {
    case WindowKind::IntegerPrefix: {
      const auto* v = std::get_if<std::int64_t>(&label);
      if (!v) throw std::invalid_argument("integer window given a " + label_kind_name(label) + " label");
      return *v >= 1 && static_cast<double>(*v) <= size_;
    }
    case WindowKind::RealInterval: {
      const auto* v = std::get_if<double>(&label);
      if (!v) throw std::invalid_argument("interval window given a " + label_kind_name(label) + " label");
      return *v >= 0.0 && *v < size_;
    }
    case WindowKind::EuclideanBall: {
      const auto* v = std::get_if<Point>(&label);
      if (!v) throw std::invalid_argument("ball window given a " + label_kind_name(label) + " label");
      if (static_cast<int>(v->size()) != dim_) {
        throw std::invalid_argument("point dimension does not match ball dimension");
      }
      return squared_norm(*v) < radius_ * radius_;
    }
  }
  return false;
}

Window Window::resized(double size) const {
  return make_window(kind_, size, kind_ == WindowKind::EuclideanBall ? std::optional<int>(dim_) : std::nullopt);
}

bool Window::nested_in(const Window& other) const {
  return kind_ == other.kind_ && dim_ == other.dim_ && size_ <= other.size_;
}

}  // namespace projgraph
