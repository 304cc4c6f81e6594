// Copyright 2026 The jcontainers Authors
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

#include "jc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jc/containers.hpp"
#include "jc/copies.hpp"
#include "jc/error.hpp"
#include "jc/io.hpp"
#include "jc/janson.hpp"
#include "jc/ramsey.hpp"

namespace jc {
namespace {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << x;
  return out.str();
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

Json number(double x) {
  if (x == std::numeric_limits<double>::infinity()) return "inf";
  if (x == -std::numeric_limits<double>::infinity()) return "-inf";
  if (x != x) return "nan";
  return x;
}

Json set_json(VertexSet s) { return s.to_vector(); }

Json sets_json(const std::vector<VertexSet>& sets) {
  Json a = Json::array();
  for (VertexSet s : sets) a.push_back(set_json(s));
  return a;
}

Json opt_rational(const std::optional<Rational>& x) {
  return x ? Json(to_string(*x)) : Json(nullptr);
}

// Shared state of one invocation: inputs read, artifacts to persist.
struct Run {
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::string config_text;
  std::map<std::string, std::string> artifacts;
  std::string stdout_text;
};

std::string slurp(Run& run, const std::string& path) {
  std::string text = read_file(path);
  run.inputs.emplace_back(path, hex64(fnv1a(text)));
  return text;
}

Graph graph_arg(Run& run, const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_graph(slurp(run, arg));
  if (auto g = Graph::named(arg)) return *g;
  throw InputError("'" + arg + "' is neither a graph file nor a graph name like K6, E2, P3, C5");
}

Hypergraph hypergraph_arg(Run& run, const std::string& path) {
  return parse_hypergraph(slurp(run, path));
}

Json threshold_json(const Threshold& t) {
  const char* kind = "unknown";
  switch (t.kind) {
    case Threshold::Kind::kZero: kind = "zero"; break;
    case Threshold::Kind::kFinite: kind = "finite"; break;
    case Threshold::Kind::kInfinite: kind = "infinite"; break;
    case Threshold::Kind::kUnknown: break;
  }
  Json j;
  j["kind"] = kind;
  j["estimate"] = number(t.estimate);
  j["lower"] = number(t.lower);
  j["upper"] = number(t.upper);
  return j;
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["checks"] = r.checks;
  j["theorem_violations"] = r.theorem_violations;
  j["oracle_incomplete"] = r.oracle_incomplete;
  j["notes"] = r.notes;
  return j;
}

Json family_json(const ContainerFamily& f, bool full_covers) {
  Json j;
  Json params;
  params["p"] = opt_rational(f.params.p);
  params["q"] = opt_rational(f.params.q);
  params["alpha"] = opt_rational(f.params.alpha);
  params["R"] = opt_rational(f.params.r_value);
  params["R_prime"] = opt_rational(f.params.r_prime);
  params["eta"] = opt_rational(f.params.eta);
  params["s"] = f.params.s;
  params["n"] = f.params.n;
  params["r"] = f.params.colours;
  params["paper_literal"] = f.params.paper_literal;
  j["params"] = params;
  j["fingerprints"] = sets_json(f.fingerprints);
  Json assignment = Json::array();
  for (const auto& a : f.assignment) {
    assignment.push_back(Json{{"I", set_json(a.independent)}, {"fingerprint", a.fingerprint}});
  }
  j["assignment"] = assignment;
  Json covers = Json::array();
  for (const Hypergraph& c : f.covers) {
    Json cj;
    cj["size"] = c.num_edges();
    if (full_covers) cj["edges"] = sets_json(c.edges());
    covers.push_back(cj);
  }
  j["covers"] = covers;
  if (!f.second_level.empty()) {
    Json levels = Json::array();
    for (const SecondLevel& l : f.second_level) {
      levels.push_back(Json{{"fingerprints", sets_json(l.fingerprints)},
                            {"containers", sets_json(l.containers)}});
    }
    j["second_level"] = levels;
  }
  j["containers"] = sets_json(f.containers);
  j["report"] = report_json(f.report);
  return j;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           const std::optional<std::uint64_t>& config) {
  if (flag) return *flag;
  if (config) return *config;
  if (const char* env = std::getenv("JC_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const std::uint64_t x = std::stoull(s, &used);
      if (used == s.size()) return x;
    } catch (const std::logic_error&) {
    }
    throw InputError("JC_SEED must be a nonnegative integer");
  }
  return 1;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

struct JansonArgs {
  std::string hypergraph, p, r;
  double tol = 1e-9;
  std::uint64_t max_iter = 1'000'000;
};

int run_janson(const JansonArgs& a, Run& run) {
  const Hypergraph h = hypergraph_arg(run, a.hypergraph);
  SolverOptions opts;
  opts.tolerance = a.tol;
  opts.max_iterations = a.max_iter;
  opts.quick_bounds = false;
  const JansonVerdict v = is_janson(h, parse_rational(a.p), parse_rational(a.r), opts);
  Json j;
  j["answer"] = to_string(v.answer);
  j["r_star"] = threshold_json(v.r_star);
  j["gap"] = number(v.gap);
  j["iterations"] = v.iterations;
  j["reason"] = v.reason;
  if (v.witness) {
    Json w = Json::array();
    const ExactMeasure exact = to_exact(*v.witness);
    for (std::size_t i = 0; i < exact.size(); ++i) {
      if (exact.weight(i) > 0) w.push_back(Json{{"edge", i}, {"weight", to_string(exact.weight(i))}});
    }
    j["witness"] = w;
    run.artifacts["witness.measure"] = format_measure(exact);
  }
  if (v.dual_bound) j["dual_bound"] = to_string(*v.dual_bound);
  run.stdout_text = dump(j);
  return v.answer == JansonAnswer::kUndecided ? 4 : 0;
}

struct CopiesArgs {
  std::string f, gprime, g, hg_out, prov_out;
};

int run_copies(const CopiesArgs& a, Run& run) {
  const Graph f = graph_arg(run, a.f);
  const Graph gp = graph_arg(run, a.gprime);
  const Graph g = graph_arg(run, a.g);
  const CopyHypergraph ch = induced_copy_hypergraph(f, gp, g);
  const std::string hg = format_hypergraph(ch.hypergraph);
  const std::string prov = format_provenance(ch);
  if (!a.hg_out.empty()) write_file(a.hg_out, hg);
  if (!a.prov_out.empty()) write_file(a.prov_out, prov);
  run.artifacts["copies.hg"] = hg;
  run.artifacts["copies.prov"] = prov;
  Json j;
  j["edges"] = ch.hypergraph.num_edges();
  j["hypergraph"] = hg;
  j["provenance"] = prov;
  run.stdout_text = dump(j);
  return 0;
}

struct HardcoverArgs {
  std::string hypergraph, q, alpha;
  bool verify = false, paper_literal = false, covers = false;
  std::optional<std::uint64_t> seed;
};

int run_hardcover(const HardcoverArgs& a, Run& run) {
  const Hypergraph h = hypergraph_arg(run, a.hypergraph);
  HardcoverOptions opts;
  opts.paper_literal = a.paper_literal;
  opts.sampled_outside = a.verify ? 100 : 0;
  opts.seed = resolve_seed(a.seed, std::nullopt);
  const ContainerFamily fam =
      hardcover_family(h, parse_rational(a.q), parse_rational(a.alpha), opts);
  run.stdout_text = dump(family_json(fam, a.covers));
  return fam.report.ok() ? 0 : 1;
}

struct CertifyArgs {
  std::string target, cover, p;
};

int run_certify(const CertifyArgs& a, Run& run) {
  const Hypergraph target = hypergraph_arg(run, a.target);
  const Hypergraph cover = hypergraph_arg(run, a.cover);
  const CoverCertificate cert = cover_certificate(target, cover, parse_rational(a.p));
  Json j;
  j["target_edges"] = target.num_edges();
  j["cover_edges"] = cover.num_edges();
  j["p"] = to_string(cert.p);
  j["weight"] = to_string(cert.weight);
  j["r_star_upper_bound"] = to_string(cert.weight);
  run.stdout_text = dump(j);
  return 0;
}

struct ContainersArgs {
  std::string hypergraph, p, q, r, eta;
  int max_universe = 14;
  bool paper_literal = false, covers = false;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
};

PipelineOptions pipeline_options(int max_universe, bool paper_literal, std::uint64_t seed,
                                 double tol) {
  PipelineOptions opts;
  opts.max_universe = max_universe;
  opts.hardcover.paper_literal = paper_literal;
  opts.hardcover.seed = seed;
  opts.solver.tolerance = tol;
  return opts;
}

int run_containers(const ContainersArgs& a, Run& run) {
  const Hypergraph h = hypergraph_arg(run, a.hypergraph);
  std::optional<Rational> eta;
  if (!a.eta.empty()) eta = parse_rational(a.eta);
  const ContainerFamily fam = non_janson_containers(
      h, parse_rational(a.p), parse_rational(a.q), parse_rational(a.r), eta, nullptr,
      pipeline_options(a.max_universe, a.paper_literal, resolve_seed(a.seed, std::nullopt), a.tol));
  run.stdout_text = dump(family_json(fam, a.covers));
  return fam.report.ok() ? 0 : 1;
}

struct ExtendArgs {
  std::string f, gprime, g, p, q, r_prime = "0", eta;
  int w = 0, r = 2, max_universe = 14;
  bool paper_literal = false, covers = false;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
};

int run_extend(const ExtendArgs& a, Run& run) {
  const Graph f = graph_arg(run, a.f);
  const Graph gp = graph_arg(run, a.gprime);
  const Graph g = graph_arg(run, a.g);
  const ExtensionHypergraph ext = extension_hypergraph(f, a.w, gp, g);
  const int m = ext.base_size;
  // Copies of the full pattern inside U, on U plus the extra vertex m.
  const Hypergraph inside = induced_copy_hypergraph(f, gp, g).hypergraph;
  const Hypergraph extra(m + 1, std::vector<VertexSet>(inside.edges().begin(), inside.edges().end()));
  ExtensionParams params;
  params.p = parse_rational(a.p);
  params.q = parse_rational(a.q);
  params.colours = a.r;
  params.r_prime = parse_rational(a.r_prime);
  if (!a.eta.empty()) params.eta = parse_rational(a.eta);
  const ContainerFamily fam = extension_containers(
      ext, extra, m, params, nullptr,
      pipeline_options(a.max_universe, a.paper_literal, resolve_seed(a.seed, std::nullopt), a.tol));
  Json j = family_json(fam, a.covers);
  j["extension_edges"] = ext.hypergraph.num_edges();
  run.artifacts["extension.hg"] = format_hypergraph(ext.hypergraph);
  run.stdout_text = dump(j);
  return fam.report.ok() ? 0 : 1;
}

struct ArrowsArgs {
  std::string g, h;
  int r = 2;
  std::optional<std::uint64_t> budget;
};

int run_arrows(const ArrowsArgs& a, Run& run) {
  const Graph g = graph_arg(run, a.g);
  const Graph h = graph_arg(run, a.h);
  if (a.r < 1) throw InputError("need --r >= 1");
  std::uint64_t explored = 0;
  const auto c = find_bad_coloring(g, std::vector<Graph>(a.r, h), a.budget, &explored);
  Json j;
  j["arrows"] = !c.has_value();
  j["explored"] = explored;
  if (c) j["colouring"] = *c;
  run.stdout_text = dump(j);
  return 0;
}

struct EventArgs {
  std::string kind, g, p, delta, config;
  std::vector<std::string> h, f, s;
  int r = 0;
  std::optional<std::uint64_t> seed, budget, subset_budget;
  double tol = 1e-9;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int run_event(const EventArgs& a, Run& run) {
  const Graph g = graph_arg(run, a.g);
  EventSpec spec;
  spec.kind = parse_event_kind(a.kind);
  std::optional<ExperimentConfig> cfg;
  if (!a.config.empty()) {
    run.config_text = slurp(run, a.config);
    cfg = parse_config(run.config_text);
  }
  for (const std::string& item : a.h) {
    for (const std::string& name : split(item, ',')) spec.targets.push_back(graph_arg(run, name));
  }
  if (a.r > 0) {
    if (spec.targets.size() != 1) throw InputError("--r replicates exactly one --H graph");
    spec.targets.assign(a.r, spec.targets.front());
  }
  for (const std::string& item : a.s) {
    for (const std::string& x : split(item, ',')) spec.sizes.push_back(std::stoi(x));
  }
  for (const std::string& item : a.f) {
    std::vector<Graph> tuple;
    for (const std::string& name : split(item, ',')) tuple.push_back(graph_arg(run, name));
    spec.explicit_tuples.push_back(tuple);
  }
  auto needs_kr = [&](const char* what) {
    if (!cfg || !cfg->k_given || !cfg->r_given) {
      throw InputError(std::string("need --") + what + " or a config that sets k and r");
    }
  };
  if (!a.p.empty()) {
    spec.p = parse_rational(a.p);
  } else {
    if (!cfg || !cfg->p_overridden) needs_kr("p");
    spec.p = cfg->p;
  }
  if (!a.delta.empty()) {
    spec.delta = parse_rational(a.delta);
  } else {
    if (!cfg || !cfg->delta_overridden) needs_kr("delta");
    spec.delta = cfg->delta;
  }
  spec.seed = resolve_seed(
      a.seed, cfg && cfg->seed_given ? std::optional<std::uint64_t>(cfg->seed) : std::nullopt);
  if (a.budget) spec.colouring_budget = *a.budget;
  else if (cfg) spec.colouring_budget = cfg->budget;
  if (a.subset_budget) spec.subset_budget = *a.subset_budget;
  SolverOptions solver;
  solver.tolerance = a.tol;
  const EventReport rep = check_event(g, spec, solver);
  Json j;
  j["event"] = rep.event;
  j["holds"] = rep.holds ? Json(*rep.holds) : Json("indeterminate");
  j["exhaustive"] = rep.exhaustive;
  if (rep.colouring) j["colouring"] = *rep.colouring;
  if (rep.set) j["set"] = set_json(*rep.set);
  if (!rep.tuple.empty()) {
    Json t = Json::array();
    for (const Graph& f : rep.tuple) t.push_back(format_graph(f));
    j["tuple"] = t;
  }
  Json pcj = Json::array();
  for (const auto& x : rep.per_colour_janson) pcj.push_back(x ? Json(*x) : Json(nullptr));
  j["per_colour_janson"] = pcj;
  j["colourings_checked"] = rep.colourings_checked;
  j["subsets_checked"] = rep.subsets_checked;
  j["janson_queries"] = rep.janson_queries;
  j["notes"] = rep.notes;
  int code = 0;
  if (!rep.holds) {
    code = 4;
  } else {
    const bool verified = verify_event_witness(g, spec, rep, solver);
    j["witness_verified"] = verified;
    if (!verified) code = 1;
  }
  run.stdout_text = dump(j);
  return code;
}

struct McArgs {
  std::string experiment, config;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  double tol = 1e-9;
};

int run_mc(const McArgs& a, Run& run) {
  ExperimentConfig cfg = default_config(3, 2);
  if (!a.config.empty()) {
    run.config_text = slurp(run, a.config);
    cfg = parse_config(run.config_text);
  }
  const std::uint64_t seed = resolve_seed(
      a.seed, cfg.seed_given ? std::optional<std::uint64_t>(cfg.seed) : std::nullopt);
  Json summary;
  summary["experiment"] = a.experiment;
  summary["seed"] = seed;
  summary["trials"] = cfg.trials;
  if (a.experiment == "chernoff") {
    const ChernoffReport rep =
        chernoff_experiment(cfg.n, cfg.u_size, cfg.s_size, cfg.trials, seed, a.jobs);
    run.stdout_text = trials_csv(rep.rows);
    summary["n"] = rep.n;
    summary["u_size"] = rep.u_size;
    summary["s_size"] = rep.s_size;
    summary["failures"] = rep.failures;
    summary["frequency"] = rep.frequency;
    summary["per_vertex_frequency"] = rep.per_vertex_frequency;
    summary["per_vertex_exact"] = to_string(rep.per_vertex_exact);
    summary["bound"] = rep.bound;
    summary["hypothesis_met"] = rep.hypothesis_met;
  } else if (a.experiment == "extension") {
    if (!cfg.p_overridden && !(cfg.k_given && cfg.r_given)) {
      throw InputError("the extension experiment needs p, or k and r, in the config");
    }
    const Graph f = *Graph::named(cfg.pattern);
    SolverOptions solver;
    solver.tolerance = a.tol;
    const ExtensionReport rep = extension_experiment(f, cfg.removed, cfg.m, cfg.r, cfg.trials,
                                                     seed, cfg.p, cfg.r_prime, a.jobs, solver);
    run.stdout_text = trials_csv(rep.rows);
    summary["m"] = rep.m;
    summary["r"] = rep.r;
    summary["p"] = to_string(cfg.p);
    summary["gamma_hits"] = rep.gamma_hits;
    summary["omega_hits"] = rep.omega_hits;
    summary["gamma_frequency"] = rep.gamma_frequency;
    summary["omega_frequency"] = rep.omega_frequency;
    summary["gamma_bound"] = rep.gamma_bound;
    summary["omega_bound"] = rep.omega_bound;
    summary["notes"] = rep.notes;
  } else {
    throw InputError("unknown experiment '" + a.experiment + "' (expected chernoff or extension)");
  }
  summary["scaled_parameters"] = cfg.delta_overridden || cfg.p_overridden || cfg.c_overridden;
  run.artifacts["trials.csv"] = run.stdout_text;
  run.artifacts["summary.json"] = dump(summary);
  return 0;
}

void persist(const std::string& dir, const std::vector<std::string>& args, const Run& run,
             const std::string& started, int code) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + dir);
  for (const auto& [name, text] : run.artifacts) write_file((fs::path(dir) / name).string(), text);
  Json rec;
  rec["command"] = args;
  rec["version"] = JC_VERSION;
  rec["config"] = run.config_text.empty() ? Json(nullptr) : Json(run.config_text);
  Json inputs = Json::array();
  for (const auto& [path, digest] : run.inputs) {
    inputs.push_back(Json{{"path", path}, {"fnv1a64", digest}});
  }
  rec["inputs"] = inputs;
  rec["started"] = started;
  rec["finished"] = utc_now();
  rec["stdout"] = run.stdout_text;
  rec["stdout_fnv1a64"] = hex64(fnv1a(run.stdout_text));
  Json artifacts = Json::array();
  for (const auto& [name, text] : run.artifacts) {
    artifacts.push_back(Json{{"name", name}, {"fnv1a64", hex64(fnv1a(text))}});
  }
  rec["artifacts"] = artifacts;
  rec["exit_status"] = code;
  write_file((fs::path(dir) / "run.json").string(), dump(rec));
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"jc: Janson-property solver, hypergraph containers and Ramsey experiments", "jc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", JC_VERSION);
  std::string out_dir;
  app.add_option("--out", out_dir, "Directory for run.json and artifacts");

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "Directory for run.json and artifacts");
  };

  JansonArgs ja;
  auto* janson = app.add_subcommand("janson", "Decide whether a hypergraph is (p, R)-Janson");
  janson->add_option("--hypergraph", ja.hypergraph, "Hypergraph file")->required();
  janson->add_option("--p", ja.p, "Probability p, e.g. 1/2")->required();
  janson->add_option("--R", ja.r, "Threshold R")->required();
  janson->add_option("--tol", ja.tol, "Relative duality-gap tolerance");
  janson->add_option("--max-iter", ja.max_iter, "Solver iteration cap");
  add_out(janson);

  CopiesArgs ca;
  auto* copies = app.add_subcommand("copies", "Hypergraph of induced copies");
  copies->add_option("--F", ca.f, "Pattern graph (file or name)")->required();
  copies->add_option("--Gprime", ca.gprime, "Subgraph G'")->required();
  copies->add_option("--G", ca.g, "Host graph G")->required();
  copies->add_option("--hg-out", ca.hg_out, "Write the hypergraph file here");
  copies->add_option("--prov-out", ca.prov_out, "Write the provenance sidecar here");
  add_out(copies);

  HardcoverArgs ha;
  auto* hardcover = app.add_subcommand("hardcover", "Fingerprints and covers of a hypergraph");
  hardcover->add_option("--hypergraph", ha.hypergraph, "Hypergraph file")->required();
  hardcover->add_option("--q", ha.q, "Sampling probability q")->required();
  hardcover->add_option("--alpha", ha.alpha, "Slack alpha")->required();
  hardcover->add_flag("--verify", ha.verify, "Re-check strictness on sampled non-members");
  hardcover->add_flag("--paper-literal", ha.paper_literal, "Keep the empty set in every cover");
  hardcover->add_flag("--covers", ha.covers, "Print every cover edge");
  hardcover->add_option("--seed", ha.seed, "Sampling seed");
  add_out(hardcover);

  CertifyArgs cc;
  auto* certify = app.add_subcommand("certify-cover", "Upper bound on R* from a cover");
  certify->add_option("--target", cc.target, "Target hypergraph file")->required();
  certify->add_option("--cover", cc.cover, "Cover hypergraph file")->required();
  certify->add_option("--p", cc.p, "Probability p")->required();
  add_out(certify);

  ContainersArgs na;
  auto* containers = app.add_subcommand("containers", "Containers for sets that are not Janson");
  containers->add_option("--hypergraph", na.hypergraph, "Uniform hypergraph file")->required();
  containers->add_option("--p", na.p, "Probability p")->required();
  containers->add_option("--q", na.q, "Probability q")->required();
  containers->add_option("--R", na.r, "Threshold R")->required();
  containers->add_option("--eta", na.eta, "Scale eta (default 2^(-2s-2))");
  containers->add_option("--max-universe", na.max_universe, "Vertex cap");
  containers->add_flag("--paper-literal", na.paper_literal, "Keep the empty set in every cover");
  containers->add_flag("--covers", na.covers, "Print every cover edge");
  containers->add_option("--seed", na.seed, "Sampling seed");
  containers->add_option("--tol", na.tol, "Solver tolerance");
  add_out(containers);

  ExtendArgs ea;
  auto* extend = app.add_subcommand("extend-containers", "Containers for the extension hypergraph");
  extend->add_option("--F", ea.f, "Pattern graph F")->required();
  extend->add_option("--w", ea.w, "Vertex of F played by the new vertex");
  extend->add_option("--Gprime", ea.gprime, "Subgraph on U")->required();
  extend->add_option("--G", ea.g, "Graph on U")->required();
  extend->add_option("--p", ea.p, "Probability p")->required();
  extend->add_option("--q", ea.q, "Probability q")->required();
  extend->add_option("--r", ea.r, "Number of colours");
  extend->add_option("--R-prime", ea.r_prime, "Threshold R'");
  extend->add_option("--eta", ea.eta, "Scale eta (default p^4 (q/2)^(4s))");
  extend->add_option("--max-universe", ea.max_universe, "Vertex cap");
  extend->add_flag("--paper-literal", ea.paper_literal, "Keep the empty set in every cover");
  extend->add_flag("--covers", ea.covers, "Print every cover edge");
  extend->add_option("--seed", ea.seed, "Sampling seed");
  extend->add_option("--tol", ea.tol, "Solver tolerance");
  add_out(extend);

  auto* ramsey = app.add_subcommand("ramsey", "Arrowing, events and Monte-Carlo experiments");
  ramsey->require_subcommand(1);
  ArrowsArgs ra;
  auto* arrows = ramsey->add_subcommand("arrows", "Does G arrow H in r colours (induced)?");
  arrows->add_option("--G", ra.g, "Host graph (file or name)")->required();
  arrows->add_option("--H", ra.h, "Target graph (file or name)")->required();
  arrows->add_option("--r", ra.r, "Number of colours");
  arrows->add_option("--budget", ra.budget, "Search-node cap");
  add_out(arrows);

  EventArgs va;
  auto* event = ramsey->add_subcommand("event", "Check the B, Bprime or E event on a graph");
  event->add_option("--kind", va.kind, "B, Bprime or E")->required();
  event->add_option("--G", va.g, "Graph (file or name)")->required();
  event->add_option("--H", va.h, "Target graphs, comma separated or repeated");
  event->add_option("--r", va.r, "Replicate a single --H graph r times");
  event->add_option("--s", va.s, "Sizes s_1,...,s_r for E");
  event->add_option("--F", va.f, "Explicit F tuple for E, comma separated; repeatable");
  event->add_option("--p", va.p, "Probability p");
  event->add_option("--delta", va.delta, "Scaled delta");
  event->add_option("--config", va.config, "Config file");
  event->add_option("--seed", va.seed, "Sampling seed");
  event->add_option("--budget", va.budget, "Colourings per search");
  event->add_option("--subset-budget", va.subset_budget, "Subsets per size");
  event->add_option("--tol", va.tol, "Solver tolerance");
  add_out(event);

  McArgs ma;
  auto* mc = ramsey->add_subcommand("mc", "Monte-Carlo experiment; CSV on stdout");
  mc->add_option("--experiment", ma.experiment, "chernoff or extension")->required();
  mc->add_option("--config", ma.config, "Config file");
  mc->add_option("--seed", ma.seed, "Seed (falls back to the config, then JC_SEED)");
  mc->add_option("--jobs", ma.jobs, "Worker threads");
  mc->add_option("--tol", ma.tol, "Solver tolerance");
  add_out(mc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << JC_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* failing = &app;
    for (const CLI::App* sub : app.get_subcommands()) {
      failing = sub;
      for (const CLI::App* inner : sub->get_subcommands()) failing = inner;
    }
    err << failing->help();
    return 2;
  }

  const std::string started = utc_now();
  Run run;
  int code = 0;
  try {
    if (janson->parsed()) code = run_janson(ja, run);
    else if (copies->parsed()) code = run_copies(ca, run);
    else if (hardcover->parsed()) code = run_hardcover(ha, run);
    else if (certify->parsed()) code = run_certify(cc, run);
    else if (containers->parsed()) code = run_containers(na, run);
    else if (extend->parsed()) code = run_extend(ea, run);
    else if (arrows->parsed()) code = run_arrows(ra, run);
    else if (event->parsed()) code = run_event(va, run);
    else if (mc->parsed()) code = run_mc(ma, run);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = static_cast<int>(e.exit_code());
  } catch (const std::invalid_argument& e) {
    err << "error: invalid number: " << e.what() << "\n";
    code = 2;
  }
  out << run.stdout_text;
  if (!out_dir.empty()) {
    try {
      persist(out_dir, args, run, started, code);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      if (code == 0) code = static_cast<int>(e.exit_code());
    }
  }
  return code;
}

}  // namespace jc
