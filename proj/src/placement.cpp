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

#include "lasynth/placement.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "lasynth/errors.hpp"

namespace lasynth {

std::string_view placement_class_name(PlacementClass c) {
  return c == PlacementClass::OptimalN ? "optimal-n" : "critical-n";
}

std::string Placement::summary() const {
  std::ostringstream os;
  os << placement_class_name(classification) << " [";
  for (std::size_t i = 0; i < logical_to_physical.size(); ++i) {
    if (i) os << ',';
    os << logical_to_physical[i];
  }
  os << ']';
  return os.str();
}

Placement classify(const CouplingMap &map, std::vector<Qubit> logical_to_physical) {
  Placement p;
  p.logical_to_physical = std::move(logical_to_physical);
  const auto &l2p = p.logical_to_physical;
  std::set<Qubit> seen;
  for (Qubit q : l2p) {
    if (q >= map.num_physical()) {
      throw RoutingError("physical qubit " + std::to_string(q) + " is not on the map");
    }
    if (!seen.insert(q).second) {
      throw RoutingError("physical qubit " + std::to_string(q) + " assigned twice");
    }
  }
  if (l2p.empty()) return p;
  const Qubit hub = l2p.back();
  const auto dist = map.distances_from(hub);
  bool star = true;
  for (std::size_t i = 0; i + 1 < l2p.size(); ++i) {
    const auto d = dist[l2p[i]];
    if (!d) {
      // Unreachable spokes surface as a RoutingError once a gate needs them.
      star = false;
      continue;
    }
    if (*d != 1) star = false;
    p.swap_estimate += *d - 1;
  }
  p.classification = star ? PlacementClass::OptimalN : PlacementClass::CriticalN;
  return p;
}

std::optional<Placement> find_star_placement(const CouplingMap &map, unsigned n,
                                             std::optional<Qubit> preferred_target) {
  if (n < 2) return std::nullopt;
  auto star_at = [&](Qubit hub) {
    const auto &nb = map.neighbors(hub);
    std::vector<Qubit> l2p(nb.begin(), nb.begin() + (n - 1));
    l2p.push_back(hub);
    return classify(map, std::move(l2p));
  };
  if (preferred_target && *preferred_target < map.num_physical() &&
      map.degree(*preferred_target) >= n - 1) {
    return star_at(*preferred_target);
  }
  for (Qubit q = 0; q < map.num_physical(); ++q) {
    if (map.degree(q) >= n - 1) return star_at(q);
  }
  return std::nullopt;
}

Placement best_placement(const CouplingMap &map, unsigned n) {
  if (n == 0) return {};
  if (map.num_physical() < n) {
    throw RoutingError("map has " + std::to_string(map.num_physical()) + " qubits, need " +
                       std::to_string(n));
  }
  Qubit hub = 0;
  for (Qubit q = 1; q < map.num_physical(); ++q) {
    if (map.degree(q) > map.degree(hub)) hub = q;
  }
  std::vector<Qubit> order;
  std::vector<bool> visited(map.num_physical(), false);
  std::deque<Qubit> queue{hub};
  visited[hub] = true;
  while (!queue.empty() && order.size() + 1 < n) {
    const Qubit q = queue.front();
    queue.pop_front();
    for (Qubit nb : map.neighbors(q)) {
      if (visited[nb]) continue;
      visited[nb] = true;
      queue.push_back(nb);
      if (order.size() + 1 < n) order.push_back(nb);
    }
  }
  if (order.size() + 1 < n) {
    throw RoutingError("the hub's connected component is smaller than " + std::to_string(n));
  }
  order.push_back(hub);
  return classify(map, std::move(order));
}

Placement place_operator(const CouplingMap &map, unsigned n,
                         std::optional<Qubit> preferred_target) {
  if (auto star = find_star_placement(map, n, preferred_target)) return *star;
  return best_placement(map, n);
}

Placement random_connected_placement(const CouplingMap &map, unsigned num_logical,
                                     std::uint64_t seed) {
  if (num_logical == 0) return {};
  if (map.num_physical() < num_logical) {
    throw RoutingError("map too small for " + std::to_string(num_logical) + " qubits");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uniform_int_distribution<Qubit> pick_start(0, map.num_physical() - 1);
    std::vector<Qubit> region{pick_start(rng)};
    std::set<Qubit> in_region(region.begin(), region.end());
    std::vector<Qubit> frontier;
    auto extend_frontier = [&](Qubit q) {
      for (Qubit nb : map.neighbors(q)) {
        if (!in_region.count(nb) && std::find(frontier.begin(), frontier.end(), nb) == frontier.end()) {
          frontier.push_back(nb);
        }
      }
    };
    extend_frontier(region[0]);
    while (region.size() < num_logical && !frontier.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
      const std::size_t i = pick(rng);
      const Qubit q = frontier[i];
      frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(i));
      region.push_back(q);
      in_region.insert(q);
      extend_frontier(q);
    }
    if (region.size() < num_logical) continue;
    std::shuffle(region.begin(), region.end(), rng);
    return classify(map, std::move(region));
  }
  throw RoutingError("no connected region of " + std::to_string(num_logical) + " qubits found");
}

}  // namespace lasynth
