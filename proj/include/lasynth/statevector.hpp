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
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "lasynth/circuit.hpp"

namespace lasynth {

using Complex = std::complex<double>;
using Matrix2 = std::array<Complex, 4>;    // row-major
using Matrix4 = std::array<Complex, 16>;   // row-major, local index = b0 + 2·b1

/// Default qubit cap for dense simulation.
inline constexpr unsigned kMaxSimQubits = 16;

/**
 * Gate matrices. RZ(θ) = diag(e^{-iθ/2}, e^{+iθ/2}), so RZ(π) = -iZ.
 * Two-qubit matrices index operand 0 as the low bit.
 */
Matrix2 single_qubit_matrix(const Gate &g);
Matrix4 two_qubit_matrix(const Gate &g);

/**
 * Dense statevector. Qubit 0 is the least-significant bit of the basis
 * index.
 */
class StateVector {
 public:
  explicit StateVector(unsigned num_qubits, std::uint64_t basis_state = 0,
                       unsigned max_qubits = kMaxSimQubits);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex &operator[](std::size_t i) const { return amps_[i]; }

  void apply(const Gate &g);
  void apply(const Circuit &c);

  double norm() const;
  double probability(std::uint64_t basis_state) const { return std::norm(amps_[basis_state]); }
  /** Marginal probability that qubit q measures 1. */
  double probability_one(Qubit q) const;
  /** Most likely basis state (lowest index on ties). */
  std::uint64_t most_likely() const;

 private:
  void apply_single(const Matrix2 &m, Qubit q);
  void apply_two(const Matrix4 &m, Qubit a, Qubit b);

  unsigned num_qubits_;
  std::vector<Complex> amps_;
};

/** Evolves |basis_state⟩ through c. Throws SimulationError over the cap. */
StateVector simulate(const Circuit &c, std::uint64_t basis_state = 0,
                     unsigned max_qubits = kMaxSimQubits);

}  // namespace lasynth
