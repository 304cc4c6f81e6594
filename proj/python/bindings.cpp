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

// Python bindings. Rationals cross the boundary as strings such as "1/3";
// graphs and hypergraphs as (vertex count, edge list) pairs.

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jc/cli.hpp"
#include "jc/copies.hpp"
#include "jc/error.hpp"
#include "jc/janson.hpp"
#include "jc/ramsey.hpp"

namespace py = pybind11;

namespace {

using EdgeList = std::vector<std::vector<int>>;

jc::Hypergraph make_hypergraph(int n, const EdgeList& edges) {
  if (n < 0 || n > jc::kMaxVertices) throw jc::InputError("vertex count must lie in [0, 64]");
  std::vector<jc::VertexSet> sets;
  for (const auto& e : edges) {
    for (int v : e) {
      if (v < 0 || v >= n) throw jc::InputError("vertex " + std::to_string(v) + " out of range");
    }
    sets.push_back(jc::VertexSet::from_vector(e));
  }
  return jc::Hypergraph(n, std::move(sets));
}

jc::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > jc::kMaxVertices) throw jc::InputError("vertex count must lie in [0, 64]");
  jc::Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw jc::InputError("bad graph edge");
    g.add_edge(u, v);
  }
  return g;
}

EdgeList edge_lists(const jc::Hypergraph& h) {
  EdgeList out;
  for (jc::VertexSet e : h.edges()) out.push_back(e.to_vector());
  return out;
}

py::dict threshold_dict(const jc::Threshold& t) {
  py::dict d;
  d["kind"] = t.describe();
  d["estimate"] = t.estimate;
  d["lower"] = t.lower;
  d["upper"] = t.upper;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Janson-property solver, induced copies and Ramsey helpers";
  m.attr("__version__") = JC_VERSION;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const jc::InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const jc::Error& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def(
      "min_lambda",
      [](int n, const EdgeList& edges, const std::string& p, double tol) {
        jc::SolverOptions opts;
        opts.tolerance = tol;
        const auto res = jc::min_lambda(make_hypergraph(n, edges), jc::parse_rational(p), opts);
        py::dict d;
        d["value"] = res.value;
        d["exact_lower"] = jc::to_string(res.exact_lower);
        d["exact_upper"] = jc::to_string(res.exact_upper);
        d["iterations"] = res.iterations;
        d["converged"] = res.converged;
        std::vector<double> w;
        for (std::size_t i = 0; i < res.witness.size(); ++i) w.push_back(res.witness.weight(i));
        d["witness"] = w;
        return d;
      },
      py::arg("n"), py::arg("edges"), py::arg("p"), py::arg("tol") = 1e-9);

  m.def(
      "is_janson",
      [](int n, const EdgeList& edges, const std::string& p, const std::string& r, double tol) {
        jc::SolverOptions opts;
        opts.tolerance = tol;
        opts.quick_bounds = false;
        const auto v = jc::is_janson(make_hypergraph(n, edges), jc::parse_rational(p),
                                     jc::parse_rational(r), opts);
        py::dict d;
        d["answer"] = jc::to_string(v.answer);
        d["r_star"] = threshold_dict(v.r_star);
        d["reason"] = v.reason;
        return d;
      },
      py::arg("n"), py::arg("edges"), py::arg("p"), py::arg("R"), py::arg("tol") = 1e-9);

  m.def(
      "induced_copies",
      [](int pn, const std::vector<std::pair<int, int>>& pattern, int n,
         const std::vector<std::pair<int, int>>& sub, const std::vector<std::pair<int, int>>& host) {
        return edge_lists(
            jc::induced_copy_hypergraph(make_graph(pn, pattern), make_graph(n, sub),
                                        make_graph(n, host))
                .hypergraph);
      },
      py::arg("pattern_n"), py::arg("pattern_edges"), py::arg("n"), py::arg("sub_edges"),
      py::arg("host_edges"));

  m.def(
      "sample_gnhalf",
      [](int n, std::uint64_t seed) { return jc::sample_gnhalf(n, seed).edges(); },
      py::arg("n"), py::arg("seed"));

  m.def(
      "arrows_induced",
      [](int n, const std::vector<std::pair<int, int>>& g, int hn,
         const std::vector<std::pair<int, int>>& h, int r) {
        py::gil_scoped_release release;
        return jc::arrows_induced(make_graph(n, g), make_graph(hn, h), r);
      },
      py::arg("n"), py::arg("edges"), py::arg("target_n"), py::arg("target_edges"),
      py::arg("r") = 2);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = jc::dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a jc subcommand; returns (exit code, stdout, stderr).");
}
