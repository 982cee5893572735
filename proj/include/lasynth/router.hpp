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
#include <vector>

#include "lasynth/circuit.hpp"
#include "lasynth/coupling_map.hpp"
#include "lasynth/placement.hpp"

namespace lasynth {

struct RoutingResult {
  /** Over map.num_physical() qubits; every two-qubit gate sits on an edge. */
  Circuit routed;
  /** Number of inserted SWAP gates (before lowering). */
  std::size_t xc = 0;
  std::vector<Qubit> initial_layout;  // logical -> physical before the first gate
  std::vector<Qubit> final_layout;    // logical -> physical after the last gate
  /** final_position[p] = where the state that started on physical p ends up. */
  std::vector<Qubit> final_position;
};

/**
 * Greedy router. A two-qubit gate on non-adjacent qubits moves its first
 * operand along the lexicographically smallest shortest path towards the
 * second, one SWAP per hop, until the two are neighbors. Throws
 * RoutingError if the placement does not cover the circuit or the operands
 * lie in different components.
 */
RoutingResult route(const Circuit &c, const CouplingMap &map, const Placement &p);

/**
 * Restriction of a wide circuit to the qubits it touches (plus `keep`),
 * renumbered in ascending physical order.
 */
struct CompactCircuit {
  Circuit circuit;
  std::vector<Qubit> physical;  // compact index -> physical qubit
};

CompactCircuit compact(const Circuit &c, std::span<const Qubit> keep = {});

/**
 * The permutation-adjusted reference of a routing: the original circuit
 * relabelled by the initial layout, followed by SWAPs that move every
 * physical state to its final position. Both circuits are compacted onto the
 * same qubit set so they can be compared with unitary_of.
 */
struct RoutingCheck {
  Circuit routed;
  Circuit reference;
};

RoutingCheck routing_check(const Circuit &original, const RoutingResult &r);

/** unitary_of on both sides of routing_check, compared up to global phase. */
bool routed_equivalent(const Circuit &original, const RoutingResult &r, double tol = 1e-9);

}  // namespace lasynth
