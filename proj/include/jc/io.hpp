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

// Plain-text formats for graphs, hypergraphs, measures and copy provenance.
//
//   graph <n>            hypergraph <n>        w <edge-index> <value>
//   e <u> <v>            E <v1> ... <vk>       p <edge-index> <image...>
//
// Blank lines and '#' comments are ignored on input.

#ifndef JC_IO_HPP_
#define JC_IO_HPP_

#include <string>
#include <vector>

#include "jc/copies.hpp"
#include "jc/graph.hpp"
#include "jc/hypergraph.hpp"
#include "jc/measure.hpp"

namespace jc {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);
Graph read_graph(const std::string& path);

Hypergraph parse_hypergraph(const std::string& text);
std::string format_hypergraph(const Hypergraph& h);
Hypergraph read_hypergraph(const std::string& path);

ExactMeasure parse_measure(const std::string& text, const Hypergraph& host);
// Float weights are written as the exact rational value of the double.
std::string format_measure(const ExactMeasure& m);
std::string format_measure(const FloatMeasure& m);

// One line per edge: the pattern vertex matched to each vertex of the edge,
// in increasing vertex order.
std::string format_provenance(const CopyHypergraph& copies);
std::vector<std::vector<int>> parse_provenance(const std::string& text, std::size_t edges);

}  // namespace jc

#endif  // JC_IO_HPP_
