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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lasynth/angle.hpp"
#include "lasynth/circuit.hpp"

namespace lasynth {

enum class OperatorKind { And, Nand, Or, Nor, Implication, Inhibition, Mcz };

/** Which superposition pair wraps the core: H/H or √X/√X†. */
enum class Variant { Hadamard, SqrtX };

enum class SuperpositionGate { H, SqrtX, SqrtXDagger };

/** Auxiliary gate on out; I is a physical no-op and is never emitted. */
enum class AuxGate { I, RzPlusPi, RzMinusPi };

enum class InitialOut { Zero, One, Either };

std::string_view operator_name(OperatorKind kind);
std::optional<OperatorKind> operator_from_name(std::string_view name);
std::string_view variant_name(Variant v);

/** Classical function of the inputs; bit i of `inputs` is in_i. Mcz -> AND. */
bool evaluate(OperatorKind kind, std::uint64_t inputs, unsigned num_inputs);

/**
 * One row of the operator specification table: the sign pattern applied to
 * the four RZ gates of every embedded three-qubit core block, and the gates
 * wrapped around the core on the out qubit.
 */
struct OperatorSpec {
  OperatorKind kind = OperatorKind::And;
  Variant variant = Variant::Hadamard;
  std::array<int, 4> signs{};  // each ±1
  SuperpositionGate sp1 = SuperpositionGate::H;
  AuxGate ax1 = AuxGate::I;
  AuxGate ax2 = AuxGate::I;
  SuperpositionGate sp2 = SuperpositionGate::H;
  InitialOut initial_out = InitialOut::Zero;
  bool expected_pass = true;

  /** Phase operators are experimental: only unitarity and phase fixtures are checked. */
  bool experimental() const { return kind == OperatorKind::Mcz; }
  bool operator==(const OperatorSpec &) const = default;
};

/** The fourteen built-in rows (seven H-variant, seven √X-variant). */
std::span<const OperatorSpec> standard_specs();
const OperatorSpec &standard_spec(OperatorKind kind, Variant variant = Variant::Hadamard);

/**
 * Declarative table, one row per line, whitespace separated:
 *
 *   kind variant s1 s2 s3 s4 sp1 ax1 ax2 sp2 initial_out expected
 *   AND  H       -  +  -  +  H   I   I   H   0           pass
 */
std::vector<OperatorSpec> parse_spec_table(std::string_view text,
                                           const std::string &source = "<spec table>");
std::vector<OperatorSpec> load_spec_table(const std::string &path);
void write_spec_table(std::ostream &os, std::span<const OperatorSpec> specs);

/** RZ magnitude for an n-qubit operator: π/2^{n-1}; twice that for Mcz. */
Angle core_magnitude(OperatorKind kind, unsigned n);

/**
 * Calls `emit` for every gate of Core_n in order without materialising the
 * circuit. The innermost block is RZ CNOT(inputs[n-2]) RZ CNOT(inputs[n-3])
 * RZ CNOT(inputs[n-2]) RZ; level k wraps two copies of level k-1 around
 * CNOT(inputs[n-k]). Every CNOT targets `out`.
 */
template <typename Emit>
void for_each_core_gate(unsigned n, const Angle &magnitude, const std::array<int, 4> &signs,
                        std::span<const Qubit> inputs, Qubit out, Emit &&emit) {
  const std::array<Gate, 4> rz = {
      Gate::rz(signs[0] < 0 ? -magnitude : magnitude, out),
      Gate::rz(signs[1] < 0 ? -magnitude : magnitude, out),
      Gate::rz(signs[2] < 0 ? -magnitude : magnitude, out),
      Gate::rz(signs[3] < 0 ? -magnitude : magnitude, out),
  };
  auto level = [&](auto &&self, unsigned k) -> void {
    if (k == 3) {
      const Gate outer = Gate::cnot(inputs[n - 2], out);
      emit(rz[0]);
      emit(outer);
      emit(rz[1]);
      emit(Gate::cnot(inputs[n - 3], out));
      emit(rz[2]);
      emit(outer);
      emit(rz[3]);
      return;
    }
    self(self, k - 1);
    emit(Gate::cnot(inputs[n - k], out));
    self(self, k - 1);
  };
  level(level, n);
}

/**
 * Core_n: 2^{n-1} RZ and 2^{n-1} - 1 CNOT gates on `num_qubits` wires
 * (default: just wide enough for the given indices).
 */
Circuit build_core(unsigned n, const Angle &magnitude, const std::array<int, 4> &signs,
                   std::span<const Qubit> inputs, Qubit out,
                   std::optional<unsigned> num_qubits = std::nullopt);

struct OperatorRequest {
  OperatorSpec spec;
  unsigned n = 3;
  std::vector<Qubit> inputs;  // n - 1 distinct indices
  Qubit out = 0;
  std::optional<unsigned> num_qubits;

  /** Canonical roles: inputs on 0..n-2, out on n-1. */
  static OperatorRequest canonical(const OperatorSpec &spec, unsigned n);
};

/** SP1 · AX1 · Core_n · AX2 · SP2, the wrappers acting on out only. */
Circuit build_operator(const OperatorRequest &req);

/**
 * Controlled-√X (or √X†) with n-1 controls. n = 2 uses a single CNOT
 * between two RZ(∓π/4) on the target inside an H pair; n ≥ 3 wraps an
 * AND-pattern core of magnitude π/2^n in an H pair. Matches the conventional
 * gate in measurement statistics; per-state phases differ.
 */
Circuit compose_controlled_v(unsigned n, std::span<const Qubit> inputs, Qubit out,
                             std::optional<unsigned> num_qubits = std::nullopt);
Circuit compose_controlled_v_dagger(unsigned n, std::span<const Qubit> inputs, Qubit out,
                                    std::optional<unsigned> num_qubits = std::nullopt);

/**
 * Multi-controlled SWAP: CNOT(out1→out0), AND operator over
 * controls+out0 targeting out1, CNOT(out1→out0).
 */
Circuit compose_fredkin(unsigned n, std::span<const Qubit> controls, Qubit out0, Qubit out1,
                        std::optional<unsigned> num_qubits = std::nullopt);

/**
 * Swaps |0,1…1⟩ and |1,0…0⟩ (out written first): CNOT fan-out from out to
 * every input, AND operator onto out, fan-out again.
 */
Circuit compose_miller(unsigned n, std::span<const Qubit> inputs, Qubit out,
                       std::optional<unsigned> num_qubits = std::nullopt);

struct OperatorCheck {
  bool pass = true;
  std::size_t rows_checked = 0;
  std::size_t failing_rows = 0;
  double min_probability = 1.0;
};

/**
 * Simulates the canonical n-qubit operator on every basis input.
 * Boolean kinds: out measures evaluate(kind, inputs) with probability
 * ≥ 1 - tol. Mcz: every basis state maps to itself (phase only).
 */
OperatorCheck check_operator(const OperatorSpec &spec, unsigned n, double tol = 1e-10);

}  // namespace lasynth
