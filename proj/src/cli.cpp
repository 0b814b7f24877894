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

#include "projgraph/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "projgraph/certification.hpp"
#include "projgraph/config.hpp"
#include "projgraph/edge_list.hpp"
#include "projgraph/graph_stats.hpp"
#include "projgraph/samplers.hpp"

namespace projgraph {
namespace {

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<double> n;
  std::optional<double> m;
  std::uint64_t trials = 1000;
  double alpha = 0.01;
  std::string out;
  std::string in;
  std::string mode = "both";
  std::optional<int> k_max;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

FamilyConfig load_config(const Options& opt) {
  if (opt.config.empty()) throw UsageError("missing required flag --config");
  FamilyConfig cfg = load_family_config(opt.config);
  if (opt.seed) {
    cfg.spec.seed = *opt.seed;
  } else if (!cfg.has_seed) {
    std::random_device rd;
    cfg.spec.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  cfg.has_seed = true;
  if (opt.k_max) cfg.k_max = *opt.k_max;
  return cfg;
}

EdgeListDocument load_graph(const Options& opt) {
  if (opt.in.empty()) throw UsageError("missing required flag --in");
  std::ifstream in(opt.in);
  if (!in) throw std::invalid_argument("cannot open '" + opt.in + "'");
  return read_edge_list(in);
}

std::optional<FamilySpec> embedded_spec(const EdgeListDocument& doc) {
  const std::string* text = doc.find("spec");
  if (!text) return std::nullopt;
  return family_config_from_json(nlohmann::json::parse(*text)).spec;
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + opt.out + "'");
  file << text;
}

Metadata graph_metadata(const FamilySpec& spec, double n) {
  return {{"spec", family_spec_to_json(spec).dump()}, {"n", format_real(n)}};
}

int emit_report(const Options& opt, std::ostream& out, TestReport report, const FamilySpec& spec) {
  report.fingerprint = spec.fingerprint();
  report.details["spec"] = nlohmann::ordered_json::parse(family_spec_to_json(spec).dump());
  emit(opt, out, report.to_json_text());
  return report.passed() ? kExitOk : kExitTestFailed;
}

int cmd_sample(const Options& opt, std::ostream& out) {
  const FamilySpec spec = load_config(opt).spec;
  const double n = require(opt.n, "--n");
  emit(opt, out, to_edge_list(sample(spec, n), graph_metadata(spec, n)));
  return kExitOk;
}

int cmd_extend(const Options& opt, std::ostream& out) {
  const EdgeListDocument doc = load_graph(opt);
  std::optional<FamilySpec> spec = embedded_spec(doc);
  if (!opt.config.empty()) spec = load_config(opt).spec;
  if (!spec) throw UsageError("input carries no spec; pass --config");
  const double m = require(opt.m, "--m");
  const double n = doc.graph.window().size();
  emit(opt, out, to_edge_list(extend_sample(*spec, doc.graph, n, m), graph_metadata(*spec, m)));
  return kExitOk;
}

int cmd_restrict(const Options& opt, std::ostream& out) {
  const EdgeListDocument doc = load_graph(opt);
  const double n = require(opt.n, "--n");
  if (n > doc.graph.window().size()) throw UsageError("--n exceeds the input window");
  if (const std::optional<FamilySpec> spec = embedded_spec(doc)) {
    emit(opt, out, to_edge_list(restrict_sample(*spec, doc.graph, n), graph_metadata(*spec, n)));
  } else {
    emit(opt, out, to_edge_list(restrict(doc.graph, doc.graph.window().resized(n)), {{"n", format_real(n)}}));
  }
  return kExitOk;
}

int cmd_stats(const Options& opt, std::ostream& out) {
  const EdgeListDocument doc = load_graph(opt);
  const GraphStats s = graph_stats(doc.graph);
  nlohmann::ordered_json j;
  if (doc.graph.fingerprint()) {
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << *doc.graph.fingerprint();
    j["family_fingerprint"] = hex.str();
  }
  j["window"] = {{"kind", to_string(doc.graph.window().kind())}, {"size", doc.graph.window().size()}};
  j["vertex_count"] = doc.graph.vertices().size();
  j["edge_count"] = s.edge_count;
  j["max_degree"] = s.max_degree;
  j["triangle_count"] = s.triangle_count;
  j["degree_histogram"] = s.degree_histogram;
  emit(opt, out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_projectivity(const Options& opt, std::ostream& out) {
  const FamilySpec spec = load_config(opt).spec;
  const TestReport r = test_projectivity(spec, require(opt.n, "--n"), require(opt.m, "--m"), opt.trials, opt.alpha,
                                         projectivity_mode_from_string(opt.mode));
  return emit_report(opt, out, r, spec);
}

int cmd_invariance(const Options& opt, std::ostream& out) {
  const FamilyConfig cfg = load_config(opt);
  const double n = require(opt.n, "--n");
  const TestReport r =
      test_invariance(cfg.spec, default_generators(cfg.spec, n, cfg.k_max), n, opt.trials, opt.alpha);
  return emit_report(opt, out, r, cfg.spec);
}

int cmd_compatibility(const Options& opt, std::ostream& out) {
  const FamilyConfig cfg = load_config(opt);
  const double n = require(opt.n, "--n");
  const double m = require(opt.m, "--m");
  const TestReport r =
      test_compatibility(default_generators(cfg.spec, n, cfg.k_max), n, m, opt.trials, cfg.spec.seed);
  return emit_report(opt, out, r, cfg.spec);
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const FamilySpec spec = load_config(opt).spec;
  const double n = require(opt.n, "--n");
  if (n != static_cast<double>(static_cast<std::int64_t>(n))) throw UsageError("--n must be an integer");
  const LabeledDistribution dist = enumerate_labeled_distribution(spec, static_cast<std::int64_t>(n), opt.trials);
  const TestResult chi = labeled_chi_square(dist);

  TestReport report;
  report.test_name = "enumerate";
  report.trials = opt.trials;
  report.n = n;
  report.alpha = opt.alpha;
  report.seed = spec.seed;
  report.statistics = {"labeled_chi_square"};
  report.p_values = {chi.p_value};
  report.details["chi_square_statistic"] = chi.statistic;
  report.details["counts"] = dist.counts;
  report.details["exact"] = dist.exact;
  report.decide();
  return emit_report(opt, out, report, spec);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective random graph sampler and certification harness", "projgraph"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"sample", "sample a graph in window n", cmd_sample},
      {"extend", "extend a sample from its window to window m", cmd_extend},
      {"restrict", "restrict an edge list to window n", cmd_restrict},
      {"stats", "summary statistics of an edge list", cmd_stats},
      {"test-projectivity", "certify projectivity between windows n and m", cmd_projectivity},
      {"test-invariance", "certify invariance under the family's symmetry group", cmd_invariance},
      {"test-compatibility", "check that group embeddings commute with restriction", cmd_compatibility},
      {"enumerate", "labeled-graph histogram against exact probabilities (graphon, n <= 5)", cmd_enumerate},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", opt.config, "family config (JSON)");
    sub->add_option("--seed", opt.seed, "base seed, overrides the config");
    sub->add_option("--n", opt.n, "window size n");
    sub->add_option("--m", opt.m, "larger window size m");
    sub->add_option("--trials", opt.trials, "number of trials N");
    sub->add_option("--alpha", opt.alpha, "significance level");
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_option("--in", opt.in, "input edge list");
    sub->add_option("--mode", opt.mode, "projectivity mode: exact, distributional, both");
    sub->add_option("--k-max", opt.k_max, "deepest dyadic level for graphex invariance");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  for (const Command& c : commands) {
    if (!app.got_subcommand(c.name)) continue;
    try {
      return c.fn(opt, out);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n\n" << app.get_subcommand(c.name)->help();
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace projgraph
