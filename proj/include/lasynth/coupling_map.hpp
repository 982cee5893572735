// Copyright 2026 The lasynth Authors
//
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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lasynth/circuit.hpp"

namespace lasynth {

/** Undirected device connectivity over physical qubits [0, num_physical). */
class CouplingMap {
 public:
  CouplingMap() = default;
  explicit CouplingMap(unsigned num_physical);

  /** Adds the undirected edge a-b; duplicates are ignored, self-loops rejected. */
  void add_edge(Qubit a, Qubit b);

  unsigned num_physical() const { return static_cast<unsigned>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  bool adjacent(Qubit a, Qubit b) const;
  /** Sorted ascending. */
  const std::vector<Qubit> &neighbors(Qubit q) const;
  unsigned degree(Qubit q) const { return static_cast<unsigned>(neighbors(q).size()); }
  unsigned max_degree() const;
  /** Edges (a < b) in ascending order. */
  std::vector<std::pair<Qubit, Qubit>> edges() const;

  /** BFS hop distances from `source`; unreachable qubits get nullopt. */
  std::vector<std::optional<unsigned>> distances_from(Qubit source) const;

 private:
  std::vector<std::vector<Qubit>> adj_;
  std::size_t num_edges_ = 0;
};

/** The 127-qubit heavy-hex (Eagle) layout: 7 rows joined by bridge qubits. */
CouplingMap heavy_hex_127();

/** 0-1-2-...-(n-1). */
CouplingMap path_map(unsigned n);
/** path_map(n) plus the closing edge (n-1)-0. */
CouplingMap ring_map(unsigned n);

/**
 * Edge-list format. Optional first line `qubits N`; then edges written as
 * `a-b`, separated by commas or whitespace; `#` starts a comment. Without a
 * header the size is one more than the largest index.
 */
CouplingMap parse_coupling_map(std::string_view text, const std::string &source = "<map>");
CouplingMap load_coupling_map(const std::string &path);
void write_coupling_map(std::ostream &os, const CouplingMap &map);

}  // namespace lasynth
