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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lasynth/circuit.hpp"
#include "lasynth/statevector.hpp"

namespace lasynth {

/// Qubit cap for full unitary construction.
inline constexpr unsigned kMaxUnitaryQubits = 10;

/** Dense square matrix, row-major. */
class Unitary {
 public:
  explicit Unitary(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/** Column-by-column simulation of every basis input. */
Unitary unitary_of(const Circuit &c);

/**
 * min_φ ‖U − e^{iφ}V‖_F, with φ fixed by aligning the largest-magnitude
 * entry of V. Returns +inf on a dimension mismatch.
 */
double global_phase_distance(const Unitary &u, const Unitary &v);
bool equivalent_up_to_global_phase(const Unitary &u, const Unitary &v, double tol = 1e-9);

/** |U_ij|² == |V_ij|² everywhere: same measurement statistics on basis inputs. */
bool probability_equivalent(const Unitary &u, const Unitary &v, double tol = 1e-9);

struct TruthRow {
  int out_bit = 0;
  double probability = 0.0;
};

/**
 * For each assignment of `inputs` (bit i of the key = value of inputs[i]),
 * prepares that basis state with `out` = initial_out (other qubits |0⟩),
 * simulates, and records the most probable value of `out`.
 */
std::map<std::uint64_t, TruthRow> truth_table(const Circuit &c, Qubit out, int initial_out,
                                              std::span<const Qubit> inputs);

struct QSphereEntry {
  std::uint64_t basis = 0;
  std::string label;  // |q_{n-1} ... q_0⟩ bit string
  double probability = 0.0;
  double phase = 0.0;  // in [0, 2π), relative to the first nonzero amplitude
};

std::string basis_label(std::uint64_t basis, unsigned num_qubits);

/** Entries with probability > 1e-12, in ascending basis order. */
std::vector<QSphereEntry> qsphere_data(const StateVector &s);

/** Tab-separated `label  probability  phase` rows with a header line. */
void write_qsphere_table(std::ostream &os, std::span<const QSphereEntry> entries);

/**
 * Basis-permutation view of a circuit: for every input basis state the most
 * likely output and its probability.
 */
struct BasisMapping {
  std::vector<std::uint64_t> image;
  std::vector<double> probability;

  double min_probability() const;
};

BasisMapping basis_mapping(const Circuit &c);

}  // namespace lasynth
