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

// Graph families: connection kernels and the full sampling specification.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "projgraph/label_space.hpp"

namespace projgraph {

enum class Family { Graphon, Graphex, RotInvariant };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

namespace kernel {

// Usable by every family.
struct Constant {
  double p;
};

// Graphon on [0,1]^2, piecewise constant over a uniform K x K grid and
// evaluated at the cell containing the latent pair.
struct GraphonGrid {
  std::vector<std::vector<double>> values;
};

// Deliberately broken graphon fixture: vertex i of window [n] gets the
// deterministic latent i/n and W(x, y) = x * y. Neither exchangeable nor
// projective; used as a power guard for the certification tests.
struct WindowScaled {};

// Graphex kernels on latent heights y.
struct Indicator {
  double c;  // W(y1, y2) = 1{y1 < c} 1{y2 < c}
};
struct Product {
  double a;  // W(y1, y2) = exp(-a (y1 + y2)); unbounded support, truncated at y_max
};

// Kernels of points in R^d.
struct HardDistance {
  double r0;  // 1{|p_i - p_j| <= r0}
};
struct SoftDistance {
  double scale;  // exp(-(|p_i - p_j| / scale)^shape)
  double shape;
};
struct RadialSum {
  double threshold;  // 1{r_i + r_j <= threshold}
};
struct HyperbolicSoft {
  double R;  // 1 / (1 + exp((d_H - R) / (2T)))
  double T;
};
// Deliberately broken geometric fixture: 1{<p_i, e1> > 0 and <p_j, e1> > 0}.
// Depends on a fixed external direction, so it is not rotation invariant.
struct FixedDirection {};

}  // namespace kernel

using Kernel = std::variant<kernel::Constant, kernel::GraphonGrid, kernel::WindowScaled, kernel::Indicator,
                            kernel::Product, kernel::HardDistance, kernel::SoftDistance, kernel::RadialSum,
                            kernel::HyperbolicSoft, kernel::FixedDirection>;

std::string kernel_name(const Kernel& k);

// Homogeneous Poisson intensity per unit volume.
struct PoissonRate {
  double rate;
};
// Piecewise constant intensity over unit-volume radial shells: shell s
// (points with s <= volume-coordinate < s+1) has intensity
// shell_rates[min(s, size - 1)]. Rotation invariant by construction.
struct RadialDensity {
  std::vector<double> shell_rates;
};
using PointSpec = std::variant<PoissonRate, RadialDensity>;

struct FamilySpec {
  Family family = Family::Graphon;
  Kernel kernel = kernel::Constant{0.5};
  int dim = 2;  // RotInvariant only
  PointSpec points = PoissonRate{1.0};
  double y_max = 1.0;  // Graphex only
  std::uint64_t seed = 0;

  // Throws std::invalid_argument when family, kernel and parameters are
  // inconsistent.
  void validate() const;

  // Window of size n in this family's label space.
  Window window(double n) const;

  // Canonical text of every field (reals as 17 significant digits).
  std::string canonical() const;

  // FNV-1a hash of canonical(); identifies (parameters, seed).
  std::uint64_t fingerprint() const;

  // True when the kernel's support extends past y_max (graphex only).
  bool truncated() const;
};

// Kernel evaluation. Each throws std::invalid_argument for kernels that do
// not belong to the family.
double graphon_weight(const Kernel& k, double x, double y);
double graphex_weight(const Kernel& k, double y1, double y2);

// Geometry of a point of R^d as seen by rotation-invariant kernels.
struct PolarPoint {
  Point cartesian;
  double radius = 0.0;
  Point direction;  // unit vector
};
PolarPoint to_polar(const Point& p);

// Spherical distance between the directions of two points.
double angular_distance(const PolarPoint& a, const PolarPoint& b);

// cosh d = cosh r_a cosh r_b - sinh r_a sinh r_b cos(theta)
double hyperbolic_distance(double r_a, double r_b, double theta);

double geometric_weight(const Kernel& k, const PolarPoint& a, const PolarPoint& b);

}  // namespace projgraph
