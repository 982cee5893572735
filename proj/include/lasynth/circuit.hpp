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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lasynth/angle.hpp"

namespace lasynth {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  I,
  X,
  SqrtX,
  SqrtXDagger,
  RZ,
  H,
  CNOT,
  SWAP,
  ECR,
  // Two-qubit controlled-√X / controlled-√X† macros, operands (control, target).
  MacroV,
  MacroVDagger,
};

unsigned arity(GateKind kind);
bool is_native(GateKind kind);
bool is_native_single(GateKind kind);
bool is_native_two(GateKind kind);

/** Mnemonic used by the circuit text format ("RZ", "CNOT", "SXDG", ...). */
std::string_view kind_name(GateKind kind);
std::optional<GateKind> kind_from_name(std::string_view name);

/**
 * One gate instance. Operand order matters for CNOT / ECR / macros:
 * (control, target).
 */
class Gate {
 public:
  static Gate single(GateKind kind, Qubit q);
  static Gate rz(Angle angle, Qubit q);
  static Gate two(GateKind kind, Qubit a, Qubit b);
  static Gate cnot(Qubit control, Qubit target) {
    return two(GateKind::CNOT, control, target);
  }

  GateKind kind() const { return kind_; }
  unsigned arity() const { return lasynth::arity(kind_); }
  /** Rotation angle; zero for every kind except RZ. */
  const Angle &angle() const { return angle_; }
  std::span<const Qubit> qubits() const { return {qubits_.data(), arity()}; }
  Qubit qubit(std::size_t i) const { return qubits_.at(i); }

  bool acts_on(Qubit q) const;
  Gate relabelled(std::span<const Qubit> mapping) const;

  /** Same kind, operands and stored angle fraction. */
  bool identical(const Gate &other) const;

 private:
  Gate(GateKind kind, Angle angle, Qubit a, Qubit b)
      : kind_(kind), angle_(angle), qubits_{a, b} {}

  GateKind kind_;
  Angle angle_;
  std::array<Qubit, 2> qubits_;
};

/**
 * An ordered gate list over qubits [0, num_qubits), with optional role
 * labels ("in0", "out", ...). The label map is injective over roles.
 */
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {}

  unsigned num_qubits() const { return num_qubits_; }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate &operator[](std::size_t i) const { return gates_[i]; }

  Circuit &add(const Gate &gate);
  Circuit &add_single(GateKind kind, Qubit q) { return add(Gate::single(kind, q)); }
  Circuit &add_rz(Angle angle, Qubit q) { return add(Gate::rz(angle, q)); }
  Circuit &add_cnot(Qubit control, Qubit target) {
    return add(Gate::cnot(control, target));
  }
  Circuit &add_two(GateKind kind, Qubit a, Qubit b) {
    return add(Gate::two(kind, a, b));
  }
  /** Appends all gates of `other`, which must not be wider than this circuit. */
  Circuit &append(const Circuit &other);

  void reserve(std::size_t n) { gates_.reserve(n); }

  const std::map<Qubit, std::string> &labels() const { return labels_; }
  void set_label(Qubit q, std::string role);
  std::optional<Qubit> find_label(std::string_view role) const;

  /** Identical gate lists and widths (labels ignored). */
  bool same_gates(const Circuit &other) const;

 private:
  unsigned num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::map<Qubit, std::string> labels_;
};

/** Concatenation a ∥ b on max(width) qubits. */
Circuit concat(const Circuit &a, const Circuit &b);

/** Relabels every gate through `mapping` (old index -> new index). */
Circuit relabel(const Circuit &c, std::span<const Qubit> mapping, unsigned num_qubits);

struct GateCounts {
  std::size_t n1 = 0;  // native single-qubit gates
  std::size_t n2 = 0;  // native two-qubit gates

  GateCounts operator+(const GateCounts &o) const { return {n1 + o.n1, n2 + o.n2}; }
  bool operator==(const GateCounts &) const = default;
};

/** Throws NonNativeGateError naming the first non-native gate. */
GateCounts gate_counts(const Circuit &c);

/** Longest chain of gates where consecutive gates share a qubit. */
std::size_t depth(const Circuit &c);

enum class Basis { CNOT, ECR };

std::string_view basis_name(Basis basis);

/**
 * Rewrites every macro kind into the native set of `basis`:
 *   H    -> RZ(π/2) √X RZ(π/2)
 *   √X†  -> RZ(π) √X RZ(π)
 *   SWAP -> CNOT(a,b) CNOT(b,a) CNOT(a,b)
 *   CV   -> H_t RZ(±π/4)_c RZ(±π/4)_t CNOT RZ(∓π/4)_t CNOT H_t
 * In the ECR basis each CNOT(c,t) becomes RZ(π/2)_c X_c √X_t ECR(c,t).
 * The result equals the input up to global phase; lowering is idempotent.
 */
Circuit lower_to_native(const Circuit &c, Basis basis = Basis::CNOT);

/** True iff c is RZ/CNOT only and its kind sequence reads the same reversed. */
bool is_palindromic_core(const Circuit &c);

}  // namespace lasynth
