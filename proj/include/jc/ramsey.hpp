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

// Desk-scale Ramsey harness: random graphs, arrowing searches, the bad and
// supersaturation events, maximal tuples and Monte-Carlo experiments.

#ifndef JC_RAMSEY_HPP_
#define JC_RAMSEY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jc/graph.hpp"
#include "jc/janson.hpp"
#include "jc/rational.hpp"

namespace jc {

// Pairs u < v in lexicographic order; each is present iff the next raw
// mt19937_64 output has its top bit set.
Graph sample_gnhalf(int n, std::uint64_t seed);

// Colour per edge, aligned with Graph::edges(); colours are 0-based.
using Coloring = std::vector<int>;

// Subgraph of `g` formed by the edges of one colour.
Graph colour_class(const Graph& g, const Coloring& c, int colour);

// A colouring with no colour i containing a copy of targets[i] that is
// induced in g and coloured i, or nullopt when none exists. Without a budget
// the search is exhaustive; a budget caps the number of search nodes.
std::optional<Coloring> find_bad_coloring(const Graph& g, const std::vector<Graph>& targets,
                                          std::optional<std::uint64_t> budget = std::nullopt,
                                          std::uint64_t* explored = nullptr);

bool arrows_induced(const Graph& g, const Graph& h, int r,
                    std::optional<std::uint64_t> budget = std::nullopt);

struct ExperimentConfig {
  int k = 3;
  int r = 2;
  int n = 8;           // N
  int m = 8;
  int c = 300;         // C
  Rational delta;      // r^-50 unless overridden
  Rational p;          // 2^-25 k^-2 r^-4 unless overridden
  std::uint64_t seed = 1;
  std::uint64_t trials = 100;
  std::uint64_t budget = std::uint64_t{1} << 20;
  int u_size = 4;
  int s_size = 16;
  std::string pattern = "P3";  // F
  int removed = 0;             // w
  Rational r_prime = 0;        // R'
  bool k_given = false;
  bool r_given = false;
  bool seed_given = false;
  bool delta_overridden = false;
  bool p_overridden = false;
  bool c_overridden = false;
};

ExperimentConfig default_config(int k, int r);
// "key = value" lines; '#' starts a comment. Unknown keys are rejected.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string format_config(const ExperimentConfig& config);

enum class EventKind { kBad, kBadPrime, kSupersaturated };
const char* to_string(EventKind kind);
EventKind parse_event_kind(const std::string& s);

struct EventSpec {
  EventKind kind = EventKind::kBad;
  std::vector<Graph> targets;                     // H, for the bad events
  std::vector<int> sizes;                         // s, for the supersaturation event
  std::vector<std::vector<Graph>> explicit_tuples;  // F tuples; empty means the catalog
  Rational p;
  Rational delta;
  std::uint64_t colouring_budget = std::uint64_t{1} << 20;
  std::uint64_t subset_budget = std::uint64_t{1} << 16;
  std::uint64_t seed = 1;
};

struct EventReport {
  std::string event;
  std::optional<bool> holds;  // nullopt: an undecided Janson query
  bool exhaustive = true;
  std::optional<Coloring> colouring;
  std::optional<VertexSet> set;               // S or W
  std::vector<Graph> tuple;                   // offending F tuple for the supersaturation event
  std::vector<std::optional<bool>> per_colour_janson;
  std::uint64_t colourings_checked = 0;
  std::uint64_t subsets_checked = 0;
  std::uint64_t janson_queries = 0;
  std::vector<std::string> notes;
};

EventReport check_event(const Graph& g, const EventSpec& spec,
                        const SolverOptions& solver = {});

// True iff the witness in `report` re-verifies by direct evaluation.
bool verify_event_witness(const Graph& g, const EventSpec& spec, const EventReport& report,
                          const SolverOptions& solver = {});

struct MaximalTuple {
  VertexSet u;
  std::vector<int> r_values;
  int initial_size = 0;
  bool janson_ok = false;       // each class Janson on U at its R_i
  bool maximal_ok = false;      // no vertex of S - U raises any R_i
  bool bound_ok = false;        // R_i <= p |U| / (2^9 r)
  bool scaled_parameters = false;
};

MaximalTuple find_maximal_tuple(const Graph& g, VertexSet s, const Coloring& c,
                                const std::vector<Graph>& targets, const Rational& p,
                                const Rational& delta, const SolverOptions& solver = {});

struct TrialRow {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t outcome = 0;
  std::uint64_t statistic = 0;
};

struct ChernoffReport {
  int n = 0, u_size = 0, s_size = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;            // |S'| <= |S|/4
  double frequency = 0;
  double per_vertex_frequency = 0;
  Rational per_vertex_exact;             // P(Bin(|U|,1/2) > |U|/4)
  double bound = 0;                      // exp(-2^-6 |U| |S|)
  bool hypothesis_met = false;           // 2^10 <= |U| <= |S|/4
  std::vector<TrialRow> rows;
};

ChernoffReport chernoff_experiment(int n, int u_size, int s_size, std::uint64_t trials,
                                   std::uint64_t seed, int jobs = 1);

struct ExtensionReport {
  int m = 0, r = 0;
  std::uint64_t trials = 0;
  std::uint64_t gamma_hits = 0;
  std::uint64_t omega_hits = 0;
  double gamma_frequency = 0;
  double omega_frequency = 0;
  double gamma_bound = 0;  // 2 exp(-2^-7 m)
  double omega_bound = 0;  // exp(-m / (2^6 r))
  std::vector<TrialRow> rows;  // outcome: bit 0 gamma, bit 1 omega; statistic: d_G(v)
  std::vector<std::string> notes;
};

ExtensionReport extension_experiment(const Graph& pattern, int w, int m, int r,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const Rational& p, const Rational& r_prime,
                                     int jobs = 1, const SolverOptions& solver = {});

std::string trials_csv(const std::vector<TrialRow>& rows);

}  // namespace jc

#endif  // JC_RAMSEY_HPP_
