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

#include "lasynth/statevector.hpp"

#include <cmath>
#include <numbers>

#include "lasynth/errors.hpp"

namespace lasynth {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

Matrix2 single_qubit_matrix(const Gate &g) {
  const double h = std::numbers::sqrt2 / 2.0;
  switch (g.kind()) {
    case GateKind::I:
      return {1.0, 0.0, 0.0, 1.0};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::SqrtX:
      return {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5}};
    case GateKind::SqrtXDagger:
      return {Complex{0.5, -0.5}, Complex{0.5, 0.5}, Complex{0.5, 0.5}, Complex{0.5, -0.5}};
    case GateKind::RZ: {
      const double half = g.angle().radians() / 2.0;
      return {std::exp(-kI * half), 0.0, 0.0, std::exp(kI * half)};
    }
    case GateKind::H:
      return {h, h, h, -h};
    default:
      throw SimulationError("not a single-qubit gate: " + std::string(kind_name(g.kind())));
  }
}

Matrix4 two_qubit_matrix(const Gate &g) {
  Matrix4 m{};
  auto set = [&m](int row, int col, Complex v) { m[row * 4 + col] = v; };
  switch (g.kind()) {
    case GateKind::CNOT:
      // operand 0 = control = low bit
      set(0, 0, 1.0);
      set(3, 1, 1.0);
      set(2, 2, 1.0);
      set(1, 3, 1.0);
      return m;
    case GateKind::SWAP:
      set(0, 0, 1.0);
      set(2, 1, 1.0);
      set(1, 2, 1.0);
      set(3, 3, 1.0);
      return m;
    case GateKind::ECR: {
      const double s = std::numbers::sqrt2 / 2.0;
      set(0, 1, s);
      set(0, 3, kI * s);
      set(1, 0, s);
      set(1, 2, -kI * s);
      set(2, 1, kI * s);
      set(2, 3, s);
      set(3, 0, -kI * s);
      set(3, 2, s);
      return m;
    }
    case GateKind::MacroV:
    case GateKind::MacroVDagger: {
      const Gate root = Gate::single(
          g.kind() == GateKind::MacroV ? GateKind::SqrtX : GateKind::SqrtXDagger, 0);
      const Matrix2 r = single_qubit_matrix(root);
      set(0, 0, 1.0);
      set(2, 2, 1.0);
      // control (low bit) = 1: rows/cols 1 and 3
      set(1, 1, r[0]);
      set(1, 3, r[1]);
      set(3, 1, r[2]);
      set(3, 3, r[3]);
      return m;
    }
    default:
      throw SimulationError("not a two-qubit gate: " + std::string(kind_name(g.kind())));
  }
}

StateVector::StateVector(unsigned num_qubits, std::uint64_t basis_state, unsigned max_qubits)
    : num_qubits_(num_qubits) {
  if (num_qubits > max_qubits) {
    throw SimulationError("simulation of " + std::to_string(num_qubits) +
                          " qubits exceeds the cap of " + std::to_string(max_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  if (basis_state >= amps_.size()) {
    throw SimulationError("basis state out of range");
  }
  amps_[basis_state] = 1.0;
}

void StateVector::apply(const Gate &g) {
  for (Qubit q : g.qubits()) {
    if (q >= num_qubits_) throw SimulationError("gate qubit out of range");
  }
  if (g.arity() == 1) {
    apply_single(single_qubit_matrix(g), g.qubit(0));
  } else {
    apply_two(two_qubit_matrix(g), g.qubit(0), g.qubit(1));
  }
}

void StateVector::apply(const Circuit &c) {
  for (const Gate &g : c.gates()) apply(g);
}

void StateVector::apply_single(const Matrix2 &m, Qubit q) {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < amps_.size(); ++base) {
    if (base & stride) continue;
    const Complex a0 = amps_[base];
    const Complex a1 = amps_[base | stride];
    amps_[base] = m[0] * a0 + m[1] * a1;
    amps_[base | stride] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply_two(const Matrix4 &m, Qubit a, Qubit b) {
  const std::size_t sa = std::size_t{1} << a;
  const std::size_t sb = std::size_t{1} << b;
  for (std::size_t base = 0; base < amps_.size(); ++base) {
    if (base & (sa | sb)) continue;
    const std::array<std::size_t, 4> idx = {base, base | sa, base | sb, base | sa | sb};
    std::array<Complex, 4> in;
    for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Complex acc{};
      for (int k = 0; k < 4; ++k) acc += m[r * 4 + k] * in[k];
      amps_[idx[r]] = acc;
    }
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex &a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::probability_one(Qubit q) const {
  const std::size_t mask = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & mask) p += std::norm(amps_[i]);
  }
  return p;
}

std::uint64_t StateVector::most_likely() const {
  std::uint64_t best = 0;
  for (std::size_t i = 1; i < amps_.size(); ++i) {
    if (std::norm(amps_[i]) > std::norm(amps_[best])) best = i;
  }
  return best;
}

StateVector simulate(const Circuit &c, std::uint64_t basis_state, unsigned max_qubits) {
  StateVector s(c.num_qubits(), basis_state, max_qubits);
  s.apply(c);
  return s;
}

}  // namespace lasynth
