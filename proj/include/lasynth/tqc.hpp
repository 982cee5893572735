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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lasynth/catalog.hpp"
#include "lasynth/circuit.hpp"
#include "lasynth/coupling_map.hpp"
#include "lasynth/placement.hpp"

namespace lasynth {

/** TQC = N1 + N2 + XC + D. */
std::size_t tqc(std::size_t n1, std::size_t n2, std::size_t xc, std::size_t d);

struct TqcReport {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t xc = 0;
  std::size_t d = 0;
  std::size_t total = 0;
  /** Two-qubit gates the SWAPs lowered into; already part of n2. */
  std::size_t swap_two_qubit = 0;
  Basis basis = Basis::CNOT;
  std::string placement = "unplaced";
  std::string identity;
  unsigned n = 0;
  bool straight = false;
  bool experimental = false;
  /** Set for reports of catalog constructs. */
  std::optional<Construct> construct;
  std::optional<CoreStats> core;

  /** Throws LasynthError unless total == tqc(n1, n2, xc, d). */
  void check() const;
};

/**
 * route -> lower_to_native -> gate_counts -> depth. xc comes from the router;
 * n1, n2 and d from the lowered routed circuit.
 */
TqcReport analyze(const Circuit &c, const CouplingMap &map, const Placement &p, Basis basis,
                  std::string identity = {});

/** Same pipeline without a device: no routing, xc = 0. */
TqcReport analyze_structural(const Circuit &c, Basis basis, std::string identity = {});

enum class Style { Straight, Conventional };

std::string construct_identity(Construct c, unsigned n, Style style,
                               Variant variant = Variant::Hadamard);

/** Builds the construct in the canonical roles and fills in the metadata fields. */
TqcReport analyze_construct(Construct c, unsigned n, Style style, const CouplingMap &map,
                            const Placement &p, Basis basis,
                            Variant variant = Variant::Hadamard);
TqcReport analyze_construct_structural(Construct c, unsigned n, Style style, Basis basis,
                                       Variant variant = Variant::Hadamard);

enum class ConventionalPlacement { SameAsStraight, Random };

struct ComparisonOptions {
  Basis basis = Basis::CNOT;
  std::optional<Qubit> preferred_target;
  ConventionalPlacement conventional_placement = ConventionalPlacement::SameAsStraight;
  std::uint64_t seed = 1;
};

struct ComparisonRow {
  Construct construct = Construct::And;
  unsigned n = 0;
  TqcReport straight;
  TqcReport conventional;
  /** conventional.total / straight.total */
  double ratio = 0.0;
  bool straight_cheaper = false;
};

/**
 * One row per construct defined at n, in the given order; constructs that do
 * not exist at n (Implication/Inhibition beyond n = 3) are skipped.
 */
std::vector<ComparisonRow> compare(std::span<const Construct> constructs, unsigned n,
                                   const CouplingMap &map, const ComparisonOptions &options = {});

struct TqcPrediction {
  unsigned n = 0;
  CoreStats core;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t d = 0;
  std::size_t total = 0;
  /** 0 when the map admits a star placement at n; unknown otherwise or without a map. */
  std::optional<std::size_t> xc;
};

/**
 * Predicts the n-qubit counts from an (n-1)-qubit straight report: the core
 * doubles (CNOT 2p+1, RZ 2p, depth 2p+1) and the gates around it stay the
 * same, except the Miller fan-out, which gains one CNOT on each side. Native
 * counts follow from the basis: every ECR-lowered CNOT brings three
 * single-qubit gates, two layers on its target inside the core and three on
 * its control in the fan-out.
 * Throws LasynthError for a conventional report or one without core stats.
 */
TqcPrediction predict_tqc(const TqcReport &previous, const CouplingMap *map = nullptr);

nlohmann::json to_json(const TqcReport &r);
nlohmann::json to_json(const TqcPrediction &p);
nlohmann::json to_json(std::span<const ComparisonRow> rows);

}  // namespace lasynth
