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

#include "lasynth/router.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lasynth/errors.hpp"
#include "lasynth/verify.hpp"

namespace lasynth {

RoutingResult route(const Circuit &c, const CouplingMap &map, const Placement &p) {
  if (p.size() < c.num_qubits()) {
    throw RoutingError("placement covers " + std::to_string(p.size()) + " of " +
                       std::to_string(c.num_qubits()) + " logical qubits");
  }
  // Validates range and injectivity.
  (void)classify(map, p.logical_to_physical);

  const unsigned width = map.num_physical();
  RoutingResult r;
  r.routed = Circuit(width);
  r.initial_layout.assign(p.logical_to_physical.begin(),
                          p.logical_to_physical.begin() + c.num_qubits());
  std::vector<Qubit> where(width);  // where[p0]: current position of the state born on p0
  std::iota(where.begin(), where.end(), Qubit{0});
  std::vector<Qubit> occupant(width);  // occupant[pos] = p0 such that where[p0] == pos
  std::iota(occupant.begin(), occupant.end(), Qubit{0});
  auto pos = [&](Qubit logical) { return where[r.initial_layout[logical]]; };

  auto swap_positions = [&](Qubit a, Qubit b) {
    r.routed.add_two(GateKind::SWAP, a, b);
    ++r.xc;
    std::swap(occupant[a], occupant[b]);
    where[occupant[a]] = a;
    where[occupant[b]] = b;
  };

  for (const Gate &g : c.gates()) {
    if (g.arity() == 1) {
      const Qubit q = pos(g.qubit(0));
      r.routed.add(g.kind() == GateKind::RZ ? Gate::rz(g.angle(), q) : Gate::single(g.kind(), q));
      continue;
    }
    Qubit a = pos(g.qubit(0));
    const Qubit b = pos(g.qubit(1));
    if (!map.adjacent(a, b)) {
      const auto dist = map.distances_from(b);
      if (!dist[a]) {
        throw RoutingError("physical qubits " + std::to_string(a) + " and " +
                           std::to_string(b) + " are not connected");
      }
      while (*dist[a] > 1) {
        Qubit next = a;
        for (Qubit nb : map.neighbors(a)) {
          if (dist[nb] && *dist[nb] + 1 == *dist[a]) {
            next = nb;
            break;
          }
        }
        swap_positions(a, next);
        a = next;
      }
    }
    r.routed.add_two(g.kind(), a, b);
  }
  r.final_position = where;
  r.final_layout.resize(c.num_qubits());
  for (Qubit l = 0; l < c.num_qubits(); ++l) r.final_layout[l] = pos(l);
  return r;
}

CompactCircuit compact(const Circuit &c, std::span<const Qubit> keep) {
  std::set<Qubit> used(keep.begin(), keep.end());
  for (const Gate &g : c.gates()) {
    for (Qubit q : g.qubits()) used.insert(q);
  }
  CompactCircuit out;
  out.physical.assign(used.begin(), used.end());
  std::vector<Qubit> mapping(c.num_qubits(), 0);
  for (std::size_t i = 0; i < out.physical.size(); ++i) {
    if (out.physical[i] >= c.num_qubits()) {
      throw CircuitError("kept qubit " + std::to_string(out.physical[i]) + " is out of range");
    }
    mapping[out.physical[i]] = static_cast<Qubit>(i);
  }
  out.circuit = relabel(c, mapping, static_cast<unsigned>(out.physical.size()));
  return out;
}

RoutingCheck routing_check(const Circuit &original, const RoutingResult &r) {
  CompactCircuit routed = compact(r.routed, r.initial_layout);
  const auto &phys = routed.physical;
  const auto index_of = [&](Qubit physical) {
    return static_cast<Qubit>(std::lower_bound(phys.begin(), phys.end(), physical) - phys.begin());
  };
  const unsigned k = static_cast<unsigned>(phys.size());

  std::vector<Qubit> mapping(original.num_qubits());
  for (Qubit l = 0; l < original.num_qubits(); ++l) mapping[l] = index_of(r.initial_layout[l]);
  Circuit reference = relabel(original, mapping, k);

  // Realise "state born on compact i ends on compact target[i]" with SWAPs.
  std::vector<Qubit> target(k);
  for (Qubit i = 0; i < k; ++i) target[i] = index_of(r.final_position[phys[i]]);
  std::vector<Qubit> content(k);  // content[pos] = origin of the state now at pos
  std::iota(content.begin(), content.end(), Qubit{0});
  std::vector<Qubit> wanted(k);  // wanted[pos] = origin that must end at pos
  for (Qubit i = 0; i < k; ++i) wanted[target[i]] = i;
  for (Qubit slot = 0; slot < k; ++slot) {
    if (content[slot] == wanted[slot]) continue;
    const auto it = std::find(content.begin() + slot, content.end(), wanted[slot]);
    const Qubit from = static_cast<Qubit>(it - content.begin());
    reference.add_two(GateKind::SWAP, slot, from);
    std::swap(content[slot], content[from]);
  }
  return {std::move(routed.circuit), std::move(reference)};
}

bool routed_equivalent(const Circuit &original, const RoutingResult &r, double tol) {
  const RoutingCheck check = routing_check(original, r);
  return equivalent_up_to_global_phase(unitary_of(check.routed), unitary_of(check.reference),
                                       tol);
}

}  // namespace lasynth
