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

#include <optional>
#include <span>
#include <string_view>

#include "lasynth/circuit.hpp"
#include "lasynth/operators.hpp"

namespace lasynth {

/** Every gate the toolkit can build in both the straight and conventional style. */
enum class Construct {
  And,
  Nand,
  Or,
  Nor,
  Implication,
  Inhibition,
  Mcz,
  ControlledV,
  ControlledVDagger,
  Fredkin,
  Miller,
};

std::string_view construct_name(Construct c);
/** Case-insensitive; accepts the names above plus "cv" / "cvdg". */
std::optional<Construct> construct_from_name(std::string_view name);

/** The nine kinds of the cost comparison (Mcz and CV† excluded). */
std::span<const Construct> comparison_constructs();

std::optional<OperatorKind> as_operator(Construct c);

/** Smallest n the construct accepts; Implication/Inhibition also cap at 3. */
unsigned min_qubits(Construct c);
bool supported(Construct c, unsigned n);

/**
 * Canonical roles on n qubits: inputs/controls on the low indices and the
 * qubit every two-qubit gate of the straight form targets (out, or out1
 * for Fredkin) on n-1.
 */
Circuit build_straight(Construct c, unsigned n, Variant variant = Variant::Hadamard);
Circuit build_conventional(Construct c, unsigned n);

struct CoreStats {
  std::size_t rz = 0;
  std::size_t cnot = 0;
  std::size_t depth = 0;

  bool operator==(const CoreStats &) const = default;
};

/** Gate counts of the embedded Core_n; none when the construct has no core (CV at n = 2). */
std::optional<CoreStats> core_stats(Construct c, unsigned n);

}  // namespace lasynth
