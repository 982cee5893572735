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

#include "lasynth/angle.hpp"
#include "lasynth/circuit.hpp"
#include "lasynth/operators.hpp"

namespace lasynth {

enum class BaselineKind {
  Mcx,
  And,
  Nand,
  Or,
  Nor,
  Implication,
  Inhibition,
  ControlledV,
  ControlledVDagger,
  Fredkin,
  Miller,
};

std::string_view baseline_name(BaselineKind kind);

/**
 * Multi-controlled X without ancillas. Two controls: the six-CNOT Clifford+T
 * Toffoli (T = RZ(π/4), H kept as a macro). More controls: recursive
 * controlled-root construction
 *   C^m(X^p) = C(X^{p/2})[c_m→t] · C^{m-1}X[→c_m] · C(X^{-p/2})[c_m→t]
 *              · C^{m-1}X[→c_m] · C^{m-1}(X^{p/2})[→t].
 */
Circuit build_mcx(unsigned n, std::span<const Qubit> controls, Qubit target,
                  std::optional<unsigned> num_qubits = std::nullopt);

/**
 * Multi-controlled H·P(phase)·H on the target, i.e. controlled X^{phase/π}:
 * phase = π is MCX, π/2 is controlled-√X. Exact up to global phase.
 */
Circuit build_controlled_x_power(std::span<const Qubit> controls, Qubit target,
                                 const Angle &phase, unsigned num_qubits);

/** De Morgan wrappers (X conjugation on inputs / out) around build_mcx. */
Circuit build_conventional_operator(OperatorKind kind, unsigned n,
                                    std::span<const Qubit> inputs, Qubit out,
                                    std::optional<unsigned> num_qubits = std::nullopt);

/**
 * Controlled-V / V† (n-1 controls), Fredkin (n-2 controls, outs = {out0,
 * out1}) and Miller (n-1 inputs, outs = {out}).
 */
Circuit build_conventional_special(BaselineKind kind, unsigned n,
                                   std::span<const Qubit> inputs, std::span<const Qubit> outs,
                                   std::optional<unsigned> num_qubits = std::nullopt);

}  // namespace lasynth
