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

// Plain-text edge-list format.
//
//   #window kind=<kind> size=<n> [dim=<d>]
//   #<key> <value>            (optional metadata, e.g. fingerprint, spec)
//   v <index> <label...> [lat=<x>]
//   e <i> <j>                 (i < j, 1-based vertex indices)
//
// Real coordinates are written with 17 significant digits so that they
// round-trip bit-exactly.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "projgraph/point_measure.hpp"

namespace projgraph {

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct EdgeListDocument {
  Graph graph;
  Metadata metadata;  // excludes the window and fingerprint lines

  const std::string* find(const std::string& key) const;
};

std::string format_real(double x);

void write_edge_list(std::ostream& os, const Graph& graph, const Metadata& metadata = {});
std::string to_edge_list(const Graph& graph, const Metadata& metadata = {});

// Throws std::runtime_error with the offending line number on malformed input.
EdgeListDocument read_edge_list(std::istream& is);
EdgeListDocument parse_edge_list(const std::string& text);

}  // namespace projgraph
