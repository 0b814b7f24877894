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

#include "projgraph/edge_list.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace projgraph {
namespace {

std::string format_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("edge list line " + std::to_string(line) + ": " + what);
}

double parse_real(const std::string& token, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || *end != '\0') fail(line, "bad real '" + token + "'");
  return v;
}

std::int64_t parse_int(const std::string& token, std::size_t line) {
  char* end = nullptr;
  const long long v = std::strtoll(token.c_str(), &end, 10);
  if (token.empty() || *end != '\0') fail(line, "bad integer '" + token + "'");
  return v;
}

Window parse_window_line(std::istringstream& in, std::size_t line) {
  std::optional<std::string> kind;
  std::optional<double> size;
  std::optional<int> dim;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) fail(line, "expected key=value in window header");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "kind") {
      kind = value;
    } else if (key == "size") {
      size = parse_real(value, line);
    } else if (key == "dim") {
      dim = static_cast<int>(parse_int(value, line));
    } else {
      fail(line, "unknown window field '" + key + "'");
    }
  }
  if (!kind || !size) fail(line, "window header needs kind and size");
  try {
    return make_window(window_kind_from_string(*kind), *size, dim);
  } catch (const std::invalid_argument& e) {
    fail(line, e.what());
  }
}

}  // namespace

const std::string* EdgeListDocument::find(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_edge_list(std::ostream& os, const Graph& graph, const Metadata& metadata) {
  const Window& w = graph.window();
  os << "#window kind=" << to_string(w.kind()) << " size=" << format_real(w.size());
  if (w.kind() == WindowKind::EuclideanBall) os << " dim=" << w.dim();
  os << '\n';
  if (graph.fingerprint()) os << "#fingerprint " << format_hex(*graph.fingerprint()) << '\n';
  for (const auto& [key, value] : metadata) os << '#' << key << ' ' << value << '\n';

  const auto& vs = graph.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    os << "v " << (i + 1);
    std::visit(
        [&](const auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, std::int64_t>) {
            os << ' ' << l;
          } else if constexpr (std::is_same_v<T, double>) {
            os << ' ' << format_real(l);
          } else {
            for (double c : l) os << ' ' << format_real(c);
          }
        },
        vs[i]);
    if (!graph.latents().empty()) os << " lat=" << format_real(graph.latents()[i]);
    os << '\n';
  }
  for (const auto& [u, v] : graph.edges()) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

std::string to_edge_list(const Graph& graph, const Metadata& metadata) {
  std::ostringstream os;
  write_edge_list(os, graph, metadata);
  return os.str();
}

EdgeListDocument read_edge_list(std::istream& is) {
  std::optional<Window> window;
  std::optional<std::uint64_t> fingerprint;
  Metadata metadata;
  std::vector<Label> vertices;
  std::vector<double> latents;
  std::vector<Edge> edges;
  bool any_latent = false;

  std::string text;
  std::size_t line_no = 0;
  while (std::getline(is, text)) {
    ++line_no;
    if (text.empty()) continue;
    if (text[0] == '#') {
      const auto space = text.find(' ');
      const std::string key = text.substr(1, space == std::string::npos ? std::string::npos : space - 1);
      const std::string rest = space == std::string::npos ? "" : text.substr(space + 1);
      if (key == "window") {
        std::istringstream in(rest);
        window = parse_window_line(in, line_no);
      } else if (key == "fingerprint") {
        char* end = nullptr;
        fingerprint = std::strtoull(rest.c_str(), &end, 16);
        if (rest.empty() || *end != '\0') fail(line_no, "bad fingerprint");
      } else {
        metadata.emplace_back(key, rest);
      }
      continue;
    }
    if (!window) fail(line_no, "missing #window header");
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    if (tag == "v") {
      std::string token;
      in >> token;
      if (parse_int(token, line_no) != static_cast<std::int64_t>(vertices.size() + 1)) {
        fail(line_no, "vertex indices must be consecutive from 1");
      }
      std::vector<std::string> fields;
      std::optional<double> latent;
      while (in >> token) {
        if (token.rfind("lat=", 0) == 0) {
          latent = parse_real(token.substr(4), line_no);
        } else {
          fields.push_back(token);
        }
      }
      switch (window->kind()) {
        case WindowKind::IntegerPrefix:
          if (fields.size() != 1) fail(line_no, "integer label expects one field");
          vertices.emplace_back(parse_int(fields[0], line_no));
          break;
        case WindowKind::RealInterval:
          if (fields.size() != 1) fail(line_no, "real label expects one field");
          vertices.emplace_back(parse_real(fields[0], line_no));
          break;
        case WindowKind::EuclideanBall: {
          if (static_cast<int>(fields.size()) != window->dim()) fail(line_no, "point label has wrong dimension");
          Point p;
          for (const auto& f : fields) p.push_back(parse_real(f, line_no));
          vertices.emplace_back(std::move(p));
          break;
        }
      }
      if (latent) {
        if (!any_latent && vertices.size() > 1) fail(line_no, "latent annotations must be on every vertex");
        any_latent = true;
        latents.push_back(*latent);
      } else if (any_latent) {
        fail(line_no, "latent annotations must be on every vertex");
      }
    } else if (tag == "e") {
      std::string a, b;
      if (!(in >> a >> b)) fail(line_no, "edge needs two endpoints");
      const auto i = parse_int(a, line_no);
      const auto j = parse_int(b, line_no);
      if (i < 1 || j < 1) fail(line_no, "vertex indices start at 1");
      edges.emplace_back(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    } else {
      fail(line_no, "unknown record '" + tag + "'");
    }
  }
  if (!window) throw std::runtime_error("edge list has no #window header");
  try {
    Graph g(*window, std::move(vertices), std::move(edges), std::move(latents));
    g.set_fingerprint(fingerprint);
    return EdgeListDocument{std::move(g), std::move(metadata)};
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list is not a valid graph: ") + e.what());
  }
}

EdgeListDocument parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

}  // namespace projgraph
