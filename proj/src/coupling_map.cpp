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

#include "lasynth/coupling_map.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lasynth/errors.hpp"

namespace lasynth {

CouplingMap::CouplingMap(unsigned num_physical) : adj_(num_physical) {}

void CouplingMap::add_edge(Qubit a, Qubit b) {
  if (a == b) throw CircuitError("self-loop on physical qubit " + std::to_string(a));
  if (a >= adj_.size() || b >= adj_.size()) {
    throw CircuitError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                       " outside a map of " + std::to_string(adj_.size()) + " qubits");
  }
  if (adjacent(a, b)) return;
  auto insert_sorted = [](std::vector<Qubit> &v, Qubit q) {
    v.insert(std::upper_bound(v.begin(), v.end(), q), q);
  };
  insert_sorted(adj_[a], b);
  insert_sorted(adj_[b], a);
  ++num_edges_;
}

bool CouplingMap::adjacent(Qubit a, Qubit b) const {
  if (a >= adj_.size() || b >= adj_.size()) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

const std::vector<Qubit> &CouplingMap::neighbors(Qubit q) const {
  if (q >= adj_.size()) throw CircuitError("physical qubit " + std::to_string(q) + " out of range");
  return adj_[q];
}

unsigned CouplingMap::max_degree() const {
  std::size_t best = 0;
  for (const auto &n : adj_) best = std::max(best, n.size());
  return static_cast<unsigned>(best);
}

std::vector<std::pair<Qubit, Qubit>> CouplingMap::edges() const {
  std::vector<std::pair<Qubit, Qubit>> out;
  out.reserve(num_edges_);
  for (Qubit a = 0; a < adj_.size(); ++a) {
    for (Qubit b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::optional<unsigned>> CouplingMap::distances_from(Qubit source) const {
  std::vector<std::optional<unsigned>> dist(adj_.size());
  if (source >= adj_.size()) return dist;
  std::deque<Qubit> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Qubit q = queue.front();
    queue.pop_front();
    for (Qubit nb : adj_[q]) {
      if (!dist[nb]) {
        dist[nb] = *dist[q] + 1;
        queue.push_back(nb);
      }
    }
  }
  return dist;
}

CouplingMap heavy_hex_127() {
  CouplingMap map(127);
  // Row r spans [start, start + length); consecutive row qubits are linked.
  constexpr std::array<std::pair<Qubit, Qubit>, 7> rows = {{
      {0, 14}, {18, 15}, {37, 15}, {56, 15}, {75, 15}, {94, 15}, {113, 14},
  }};
  for (const auto &[start, length] : rows) {
    for (Qubit q = start; q + 1 < start + length; ++q) map.add_edge(q, q + 1);
  }
  // (upper-row qubit, bridge qubit, lower-row qubit)
  constexpr std::array<std::array<Qubit, 3>, 24> bridges = {{
      {0, 14, 18},   {4, 15, 22},   {8, 16, 26},    {12, 17, 30},
      {20, 33, 39},  {24, 34, 43},  {28, 35, 47},   {32, 36, 51},
      {37, 52, 56},  {41, 53, 60},  {45, 54, 64},   {49, 55, 68},
      {58, 71, 77},  {62, 72, 81},  {66, 73, 85},   {70, 74, 89},
      {75, 90, 94},  {79, 91, 98},  {83, 92, 102},  {87, 93, 106},
      {96, 109, 114}, {100, 110, 118}, {104, 111, 122}, {108, 112, 126},
  }};
  for (const auto &[up, bridge, down] : bridges) {
    map.add_edge(up, bridge);
    map.add_edge(bridge, down);
  }
  return map;
}

CouplingMap path_map(unsigned n) {
  CouplingMap map(n);
  for (Qubit q = 0; q + 1 < n; ++q) map.add_edge(q, q + 1);
  return map;
}

CouplingMap ring_map(unsigned n) {
  CouplingMap map = path_map(n);
  if (n >= 3) map.add_edge(n - 1, 0);
  return map;
}

namespace {

std::optional<Qubit> parse_index(std::string_view s) {
  Qubit v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

CouplingMap parse_coupling_map(std::string_view text, const std::string &source) {
  std::optional<unsigned> declared;
  std::vector<std::pair<Qubit, Qubit>> edges;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::replace(raw.begin(), raw.end(), ',', ' ');
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "qubits") {
      if (seen_content) throw ParseError(source, line_no, "'qubits' header must come first");
      if (tok.size() != 2) throw ParseError(source, line_no, "expected 'qubits N'");
      const auto n = parse_index(tok[1]);
      if (!n) throw ParseError(source, line_no, "bad qubit count '" + tok[1] + "'");
      declared = *n;
      seen_content = true;
      continue;
    }
    seen_content = true;
    for (const auto &t : tok) {
      const auto dash = t.find('-');
      if (dash == std::string::npos) throw ParseError(source, line_no, "expected a-b, got '" + t + "'");
      const auto a = parse_index(std::string_view(t).substr(0, dash));
      const auto b = parse_index(std::string_view(t).substr(dash + 1));
      if (!a || !b) throw ParseError(source, line_no, "bad edge '" + t + "'");
      if (*a == *b) throw ParseError(source, line_no, "self-loop '" + t + "'");
      if (declared && (*a >= *declared || *b >= *declared)) {
        throw ParseError(source, line_no, "edge '" + t + "' exceeds declared qubit count");
      }
      edges.emplace_back(*a, *b);
    }
  }
  unsigned n = declared.value_or(0);
  if (!declared) {
    for (const auto &[a, b] : edges) n = std::max<unsigned>(n, std::max(a, b) + 1);
  }
  CouplingMap map(n);
  for (const auto &[a, b] : edges) map.add_edge(a, b);
  return map;
}

CouplingMap load_coupling_map(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coupling map '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coupling_map(ss.str(), path);
}

void write_coupling_map(std::ostream &os, const CouplingMap &map) {
  os << "qubits " << map.num_physical() << '\n';
  for (const auto &[a, b] : map.edges()) os << a << '-' << b << '\n';
}

}  // namespace lasynth
