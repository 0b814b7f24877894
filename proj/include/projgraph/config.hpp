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

// JSON configuration files describing one graph family.
//
//   {
//     "family": "graphon" | "graphex" | "rotinv",
//     "kernel": {"form": "constant", "p": 0.5},
//     "window": {"kind": "euclidean_ball", "dim": 2},      (optional)
//     "point_spec": {"poisson_rate": 3.0} | {"radial_density": [..]},
//     "y_max": 2.0,
//     "seed": 42,
//     "k_max": 3                                           (optional)
//   }
//
// Kernel forms: constant(p), grid(values), window_scaled, indicator(c),
// product(a), hard_distance(r0), soft_distance(scale, shape),
// radial_sum(threshold), hyperbolic_soft(R, T), fixed_direction.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "projgraph/family_spec.hpp"

namespace projgraph {

struct FamilyConfig {
  FamilySpec spec;
  bool has_seed = false;   // false when the file carries no "seed"
  int k_max = 3;           // dyadic depth for graphex invariance tests
};

// Throws std::invalid_argument with the offending key on bad input.
FamilyConfig family_config_from_json(const nlohmann::json& j);
FamilyConfig load_family_config(const std::string& path);

// Canonical JSON of a spec (sorted keys, seed included). Parsing it back
// yields an equal fingerprint.
nlohmann::json family_spec_to_json(const FamilySpec& spec);

}  // namespace projgraph
