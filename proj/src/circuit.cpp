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

#include "lasynth/circuit.hpp"

#include <algorithm>

#include "lasynth/errors.hpp"

namespace lasynth {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  unsigned arity;
  bool native;
};

constexpr std::array<KindInfo, 11> kKinds = {{
    {GateKind::I, "I", 1, true},
    {GateKind::X, "X", 1, true},
    {GateKind::SqrtX, "SX", 1, true},
    {GateKind::SqrtXDagger, "SXDG", 1, false},
    {GateKind::RZ, "RZ", 1, true},
    {GateKind::H, "H", 1, false},
    {GateKind::CNOT, "CNOT", 2, true},
    {GateKind::SWAP, "SWAP", 2, false},
    {GateKind::ECR, "ECR", 2, true},
    {GateKind::MacroV, "CV", 2, false},
    {GateKind::MacroVDagger, "CVDG", 2, false},
}};

const KindInfo &info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

}  // namespace

unsigned arity(GateKind kind) { return info(kind).arity; }
bool is_native(GateKind kind) { return info(kind).native; }
bool is_native_single(GateKind kind) { return is_native(kind) && arity(kind) == 1; }
bool is_native_two(GateKind kind) { return is_native(kind) && arity(kind) == 2; }
std::string_view kind_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> kind_from_name(std::string_view name) {
  for (const auto &k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

Gate Gate::single(GateKind kind, Qubit q) {
  if (lasynth::arity(kind) != 1) {
    throw CircuitError(std::string(kind_name(kind)) + " is not a single-qubit kind");
  }
  if (kind == GateKind::RZ) {
    throw CircuitError("RZ needs an angle; use Gate::rz");
  }
  return Gate(kind, Angle{}, q, q);
}

Gate Gate::rz(Angle angle, Qubit q) { return Gate(GateKind::RZ, angle, q, q); }

Gate Gate::two(GateKind kind, Qubit a, Qubit b) {
  if (lasynth::arity(kind) != 2) {
    throw CircuitError(std::string(kind_name(kind)) + " is not a two-qubit kind");
  }
  if (a == b) {
    throw CircuitError(std::string(kind_name(kind)) + " with repeated qubit " +
                       std::to_string(a));
  }
  return Gate(kind, Angle{}, a, b);
}

bool Gate::acts_on(Qubit q) const {
  const auto qs = qubits();
  return std::find(qs.begin(), qs.end(), q) != qs.end();
}

Gate Gate::relabelled(std::span<const Qubit> mapping) const {
  Gate g = *this;
  for (unsigned i = 0; i < arity(); ++i) g.qubits_[i] = mapping[qubits_[i]];
  if (arity() == 1) g.qubits_[1] = g.qubits_[0];
  return g;
}

bool Gate::identical(const Gate &other) const {
  if (kind_ != other.kind_ || !angle_.same_representation(other.angle_)) {
    return false;
  }
  const auto a = qubits();
  const auto b = other.qubits();
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

Circuit &Circuit::add(const Gate &gate) {
  for (Qubit q : gate.qubits()) {
    if (q >= num_qubits_) {
      throw CircuitError("qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  gates_.push_back(gate);
  return *this;
}

Circuit &Circuit::append(const Circuit &other) {
  if (other.num_qubits_ > num_qubits_) {
    throw CircuitError("cannot append a wider circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

void Circuit::set_label(Qubit q, std::string role) {
  if (q >= num_qubits_) {
    throw CircuitError("label on out-of-range qubit " + std::to_string(q));
  }
  for (const auto &[other, name] : labels_) {
    if (other != q && name == role) {
      throw CircuitError("role '" + role + "' already assigned to qubit " +
                         std::to_string(other));
    }
  }
  labels_[q] = std::move(role);
}

std::optional<Qubit> Circuit::find_label(std::string_view role) const {
  for (const auto &[q, name] : labels_) {
    if (name == role) return q;
  }
  return std::nullopt;
}

bool Circuit::same_gates(const Circuit &other) const {
  return num_qubits_ == other.num_qubits_ &&
         std::equal(gates_.begin(), gates_.end(), other.gates_.begin(),
                    other.gates_.end(),
                    [](const Gate &a, const Gate &b) { return a.identical(b); });
}

Circuit concat(const Circuit &a, const Circuit &b) {
  Circuit out(std::max(a.num_qubits(), b.num_qubits()));
  out.reserve(a.size() + b.size());
  out.append(a).append(b);
  return out;
}

Circuit relabel(const Circuit &c, std::span<const Qubit> mapping, unsigned num_qubits) {
  if (mapping.size() < c.num_qubits()) {
    throw CircuitError("relabel mapping shorter than circuit width");
  }
  Circuit out(num_qubits);
  out.reserve(c.size());
  for (const Gate &g : c.gates()) out.add(g.relabelled(mapping));
  for (const auto &[q, role] : c.labels()) out.set_label(mapping[q], role);
  return out;
}

GateCounts gate_counts(const Circuit &c) {
  GateCounts counts;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const GateKind k = c[i].kind();
    if (is_native_single(k)) {
      ++counts.n1;
    } else if (is_native_two(k)) {
      ++counts.n2;
    } else {
      throw NonNativeGateError(i, std::string(kind_name(k)));
    }
  }
  return counts;
}

std::size_t depth(const Circuit &c) {
  std::vector<std::size_t> frontier(c.num_qubits(), 0);
  std::size_t best = 0;
  for (const Gate &g : c.gates()) {
    std::size_t level = 0;
    for (Qubit q : g.qubits()) level = std::max(level, frontier[q]);
    ++level;
    for (Qubit q : g.qubits()) frontier[q] = level;
    best = std::max(best, level);
  }
  return best;
}

std::string_view basis_name(Basis basis) {
  return basis == Basis::CNOT ? "CNOT" : "ECR";
}

namespace {

void emit_hadamard(Circuit &out, Qubit q) {
  out.add_rz(Angle(1, 2), q);
  out.add_single(GateKind::SqrtX, q);
  out.add_rz(Angle(1, 2), q);
}

void emit_cnot(Circuit &out, Qubit control, Qubit target, Basis basis) {
  if (basis == Basis::CNOT) {
    out.add_cnot(control, target);
    return;
  }
  out.add_rz(Angle(1, 2), control);
  out.add_single(GateKind::X, control);
  out.add_single(GateKind::SqrtX, target);
  out.add_two(GateKind::ECR, control, target);
}

// Controlled phase diag(1, 1, 1, e^{iφ}) with φ = ±π/2, conjugated by H on
// the target: controlled-(√X)^{±1}.
void emit_controlled_root(Circuit &out, Qubit control, Qubit target, bool dagger,
                          Basis basis) {
  const Angle quarter = dagger ? Angle(-1, 4) : Angle(1, 4);
  emit_hadamard(out, target);
  out.add_rz(quarter, control);
  out.add_rz(quarter, target);
  emit_cnot(out, control, target, basis);
  out.add_rz(-quarter, target);
  emit_cnot(out, control, target, basis);
  emit_hadamard(out, target);
}

}  // namespace

Circuit lower_to_native(const Circuit &c, Basis basis) {
  Circuit out(c.num_qubits());
  out.reserve(c.size() * 2);
  for (const Gate &g : c.gates()) {
    switch (g.kind()) {
      case GateKind::I:
      case GateKind::X:
      case GateKind::SqrtX:
      case GateKind::RZ:
      case GateKind::ECR:
        out.add(g);
        break;
      case GateKind::CNOT:
        emit_cnot(out, g.qubit(0), g.qubit(1), basis);
        break;
      case GateKind::H:
        emit_hadamard(out, g.qubit(0));
        break;
      case GateKind::SqrtXDagger:
        out.add_rz(Angle::pi(), g.qubit(0));
        out.add_single(GateKind::SqrtX, g.qubit(0));
        out.add_rz(Angle::pi(), g.qubit(0));
        break;
      case GateKind::SWAP:
        emit_cnot(out, g.qubit(0), g.qubit(1), basis);
        emit_cnot(out, g.qubit(1), g.qubit(0), basis);
        emit_cnot(out, g.qubit(0), g.qubit(1), basis);
        break;
      case GateKind::MacroV:
      case GateKind::MacroVDagger:
        emit_controlled_root(out, g.qubit(0), g.qubit(1),
                             g.kind() == GateKind::MacroVDagger, basis);
        break;
      default:
        throw CircuitError("no lowering for gate kind " +
                           std::string(kind_name(g.kind())));
    }
  }
  for (const auto &[q, role] : c.labels()) out.set_label(q, role);
  return out;
}

bool is_palindromic_core(const Circuit &c) {
  const auto gates = c.gates();
  if (gates.size() % 2 == 0) return false;
  for (const Gate &g : gates) {
    if (g.kind() != GateKind::RZ && g.kind() != GateKind::CNOT) return false;
  }
  if (gates[gates.size() / 2].kind() != GateKind::CNOT) return false;
  for (std::size_t i = 0, j = gates.size() - 1; i < j; ++i, --j) {
    if (gates[i].kind() != gates[j].kind()) return false;
  }
  return true;
}

}  // namespace lasynth
