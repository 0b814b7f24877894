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

// Coupled projective samplers for the three graph families.
//
// Every random quantity is a coin keyed by an absolute structural
// coordinate, never by draw order:
//
//   graphon   latent of vertex i: ("lat", i); edge {i, j}: ("edge", i, j)
//   graphex   unit cell (a, b) of [0, n) x [0, y_max): count ("cnt", a, b),
//             point idx position ("pos", a, b, idx, 0|1);
//             edge between points: ("edge", (a, b, idx), (a', b', idx'))
//   rotinv    unit-volume shell s: count ("cnt", s), point idx volume
//             coordinate ("vol", s, idx), direction ("dir", s, idx, c);
//             edge: ("edge", (s, idx), (s', idx'))
//
// Consequently sample(spec, m) restricted to window n equals sample(spec, n)
// exactly (for graphex, after dropping vertices isolated in the small
// window), which is the coupling realising the projective system.

#include <cstdint>

#include "projgraph/family_spec.hpp"
#include "projgraph/point_measure.hpp"

namespace projgraph {

// Vertices 1..n, latent annotations x_i.
Graph sample_graphon(const FamilySpec& spec, std::int64_t n);

// Vertices are the non-isolated Poisson points, labelled by position in
// [0, n) (on the 2^-40 grid) and annotated with their height y < y_max.
Graph sample_graphex(const FamilySpec& spec, double n);

// Vertices are the points of the process in the open ball of volume n,
// labelled by Cartesian coordinates and annotated with their radius.
Graph sample_rotinv(const FamilySpec& spec, double n);

// Dispatches on spec.family. The result carries spec.fingerprint().
Graph sample(const FamilySpec& spec, double n);

// Grows a sample of size n produced by `spec` into one of size m whose
// restriction to window n reproduces `graph`. Throws std::invalid_argument
// when the graph's fingerprint or content does not match the spec.
Graph extend_sample(const FamilySpec& spec, const Graph& graph, double n, double m);

// Restriction as the family sees it: graph-level restriction, followed by
// dropping isolated vertices for graphex samples.
Graph restrict_sample(const FamilySpec& spec, const Graph& graph, double n);

}  // namespace projgraph
