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

#include "projgraph/config.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace projgraph {
namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument(std::string("config: missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

Kernel kernel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("form") || !j.at("form").is_string()) {
    throw std::invalid_argument("config: kernel needs a string 'form'");
  }
  const std::string form = j.at("form").get<std::string>();
  if (form == "constant") return kernel::Constant{number(j, "p")};
  if (form == "grid") {
    if (!j.contains("values") || !j.at("values").is_array()) {
      throw std::invalid_argument("config: grid kernel needs 'values'");
    }
    return kernel::GraphonGrid{j.at("values").get<std::vector<std::vector<double>>>()};
  }
  if (form == "window_scaled") return kernel::WindowScaled{};
  if (form == "indicator") return kernel::Indicator{number(j, "c")};
  if (form == "product") return kernel::Product{number(j, "a")};
  if (form == "hard_distance") return kernel::HardDistance{number(j, "r0")};
  if (form == "soft_distance") return kernel::SoftDistance{number(j, "scale"), number(j, "shape")};
  if (form == "radial_sum") return kernel::RadialSum{number(j, "threshold")};
  if (form == "hyperbolic_soft") return kernel::HyperbolicSoft{number(j, "R"), number(j, "T")};
  if (form == "fixed_direction") return kernel::FixedDirection{};
  throw std::invalid_argument("config: unknown kernel form '" + form + "'");
}

json kernel_to_json(const Kernel& k) {
  json j;
  j["form"] = kernel_name(k);
  if (const auto* c = std::get_if<kernel::Constant>(&k)) j["p"] = c->p;
  if (const auto* g = std::get_if<kernel::GraphonGrid>(&k)) j["values"] = g->values;
  if (const auto* i = std::get_if<kernel::Indicator>(&k)) j["c"] = i->c;
  if (const auto* p = std::get_if<kernel::Product>(&k)) j["a"] = p->a;
  if (const auto* h = std::get_if<kernel::HardDistance>(&k)) j["r0"] = h->r0;
  if (const auto* s = std::get_if<kernel::SoftDistance>(&k)) {
    j["scale"] = s->scale;
    j["shape"] = s->shape;
  }
  if (const auto* r = std::get_if<kernel::RadialSum>(&k)) j["threshold"] = r->threshold;
  if (const auto* h = std::get_if<kernel::HyperbolicSoft>(&k)) {
    j["R"] = h->R;
    j["T"] = h->T;
  }
  return j;
}

WindowKind window_kind_of(Family f) {
  switch (f) {
    case Family::Graphon:
      return WindowKind::IntegerPrefix;
    case Family::Graphex:
      return WindowKind::RealInterval;
    case Family::RotInvariant:
      return WindowKind::EuclideanBall;
  }
  throw std::logic_error("unhandled family");
}

}  // namespace

FamilyConfig family_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  static const char* const kKnown[] = {"family", "kernel", "window", "point_spec", "y_max", "seed", "k_max"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw std::invalid_argument("config: unknown field '" + key + "'");
    }
  }
  if (!j.contains("family") || !j.at("family").is_string()) throw std::invalid_argument("config: missing 'family'");
  if (!j.contains("kernel")) throw std::invalid_argument("config: missing 'kernel'");

  FamilyConfig cfg;
  FamilySpec& spec = cfg.spec;
  spec.family = family_from_string(j.at("family").get<std::string>());
  spec.kernel = kernel_from_json(j.at("kernel"));

  if (j.contains("window")) {
    const json& w = j.at("window");
    if (w.contains("kind") && window_kind_from_string(w.at("kind").get<std::string>()) != window_kind_of(spec.family)) {
      throw std::invalid_argument("config: window kind does not match the family");
    }
    if (w.contains("dim")) spec.dim = w.at("dim").get<int>();
  }
  if (j.contains("point_spec")) {
    const json& p = j.at("point_spec");
    if (p.contains("poisson_rate")) {
      spec.points = PoissonRate{number(p, "poisson_rate")};
    } else if (p.contains("radial_density")) {
      spec.points = RadialDensity{p.at("radial_density").get<std::vector<double>>()};
    } else {
      throw std::invalid_argument("config: point_spec needs 'poisson_rate' or 'radial_density'");
    }
  }
  if (j.contains("y_max")) spec.y_max = number(j, "y_max");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw std::invalid_argument("config: seed must be a nonnegative integer");
    spec.seed = j.at("seed").get<std::uint64_t>();
    cfg.has_seed = true;
  }
  if (j.contains("k_max")) cfg.k_max = j.at("k_max").get<int>();
  spec.validate();
  return cfg;
}

FamilyConfig load_family_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: " + path + ": " + e.what());
  }
  return family_config_from_json(j);
}

json family_spec_to_json(const FamilySpec& spec) {
  json j;
  j["family"] = to_string(spec.family);
  j["kernel"] = kernel_to_json(spec.kernel);
  j["window"] = {{"kind", to_string(window_kind_of(spec.family))}};
  if (spec.family == Family::RotInvariant) j["window"]["dim"] = spec.dim;
  if (const auto* r = std::get_if<PoissonRate>(&spec.points)) {
    j["point_spec"] = {{"poisson_rate", r->rate}};
  } else {
    j["point_spec"] = {{"radial_density", std::get<RadialDensity>(spec.points).shell_rates}};
  }
  if (spec.family == Family::Graphex) j["y_max"] = spec.y_max;
  j["seed"] = spec.seed;
  return j;
}

}  // namespace projgraph
