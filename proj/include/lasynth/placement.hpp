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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lasynth/circuit.hpp"
#include "lasynth/coupling_map.hpp"

namespace lasynth {

/**
 * optimal-n: the hub qubit sits next to every spoke, so a straight circuit
 * routes without SWAPs. critical-n: at least one spoke is further away.
 */
enum class PlacementClass { OptimalN, CriticalN };

std::string_view placement_class_name(PlacementClass c);

struct Placement {
  std::vector<Qubit> logical_to_physical;
  PlacementClass classification = PlacementClass::CriticalN;
  std::size_t swap_estimate = 0;

  std::size_t size() const { return logical_to_physical.size(); }
  /** e.g. "optimal-n [3,5,15,4]", physical qubits listed in logical order. */
  std::string summary() const;
};

/**
 * Star placement of an n-qubit operator whose logical qubit n-1 is the hub
 * (out) and 0..n-2 the spokes (inputs). The hub goes to `preferred_target`
 * when it has degree ≥ n-1, else to the lowest-index such qubit; spokes
 * take its neighbors in ascending order. None if no qubit is wide enough.
 */
std::optional<Placement> find_star_placement(const CouplingMap &map, unsigned n,
                                             std::optional<Qubit> preferred_target = std::nullopt);

/**
 * Fallback when no star exists: hub on the highest-degree qubit (lowest
 * index on ties), spokes filled in BFS order from it. swap_estimate is the
 * sum over spokes of (distance to hub − 1).
 */
Placement best_placement(const CouplingMap &map, unsigned n);

/** Star placement if one exists, best_placement otherwise. */
Placement place_operator(const CouplingMap &map, unsigned n,
                         std::optional<Qubit> preferred_target = std::nullopt);

/**
 * Seeded random injective placement of `num_logical` qubits onto a connected
 * region of the map, grown from a random start.
 */
Placement random_connected_placement(const CouplingMap &map, unsigned num_logical,
                                     std::uint64_t seed);

/** Classification and swap estimate of an arbitrary placement, hub = last logical. */
Placement classify(const CouplingMap &map, std::vector<Qubit> logical_to_physical);

}  // namespace lasynth
