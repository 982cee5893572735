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

#include "lasynth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>

#include "lasynth/errors.hpp"

namespace lasynth {

Unitary unitary_of(const Circuit &c) {
  if (c.num_qubits() > kMaxUnitaryQubits) {
    throw SimulationError("unitary of " + std::to_string(c.num_qubits()) +
                          " qubits exceeds the cap of " +
                          std::to_string(kMaxUnitaryQubits));
  }
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  Unitary u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const StateVector s = simulate(c, col);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = s[row];
  }
  return u;
}

double global_phase_distance(const Unitary &u, const Unitary &v) {
  if (u.dim() != v.dim()) return std::numeric_limits<double>::infinity();
  std::size_t br = 0;
  std::size_t bc = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) {
      if (std::abs(v(r, c)) > best) {
        best = std::abs(v(r, c));
        br = r;
        bc = c;
      }
    }
  }
  Complex phase = 1.0;
  if (best > 0.0 && std::abs(u(br, bc)) > 0.0) {
    const Complex ratio = u(br, bc) / v(br, bc);
    phase = ratio / std::abs(ratio);
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) sum += std::norm(u(r, c) - phase * v(r, c));
  }
  return std::sqrt(sum);
}

bool equivalent_up_to_global_phase(const Unitary &u, const Unitary &v, double tol) {
  return global_phase_distance(u, v) <= tol;
}

bool probability_equivalent(const Unitary &u, const Unitary &v, double tol) {
  if (u.dim() != v.dim()) return false;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      if (std::abs(std::norm(u(r, c)) - std::norm(v(r, c))) > tol) return false;
    }
  }
  return true;
}

std::map<std::uint64_t, TruthRow> truth_table(const Circuit &c, Qubit out, int initial_out,
                                              std::span<const Qubit> inputs) {
  std::map<std::uint64_t, TruthRow> table;
  const std::uint64_t rows = std::uint64_t{1} << inputs.size();
  for (std::uint64_t bits = 0; bits < rows; ++bits) {
    std::uint64_t basis = initial_out ? (std::uint64_t{1} << out) : 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if ((bits >> i) & 1U) basis |= std::uint64_t{1} << inputs[i];
    }
    const StateVector s = simulate(c, basis);
    const double p1 = s.probability_one(out);
    table[bits] = p1 > 0.5 ? TruthRow{1, p1} : TruthRow{0, 1.0 - p1};
  }
  return table;
}

std::string basis_label(std::uint64_t basis, unsigned num_qubits) {
  std::string label(num_qubits, '0');
  for (unsigned q = 0; q < num_qubits; ++q) {
    if ((basis >> q) & 1U) label[num_qubits - 1 - q] = '1';
  }
  return label;
}

std::vector<QSphereEntry> qsphere_data(const StateVector &s) {
  constexpr double kCutoff = 1e-12;
  std::vector<QSphereEntry> out;
  double reference = 0.0;
  bool have_reference = false;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const double p = std::norm(s[i]);
    if (p <= kCutoff) continue;
    if (!have_reference) {
      reference = std::arg(s[i]);
      have_reference = true;
    }
    double phase = std::arg(s[i]) - reference;
    phase = std::fmod(phase, 2.0 * std::numbers::pi);
    if (phase < 0.0) phase += 2.0 * std::numbers::pi;
    // Snap values within rounding of 2π back to 0.
    if (2.0 * std::numbers::pi - phase < 1e-12) phase = 0.0;
    out.push_back({i, basis_label(i, s.num_qubits()), p, phase});
  }
  return out;
}

void write_qsphere_table(std::ostream &os, std::span<const QSphereEntry> entries) {
  os << "label\tprobability\tphase\n";
  const auto flags = os.flags();
  os << std::setprecision(12);
  for (const auto &e : entries) {
    os << e.label << '\t' << e.probability << '\t' << e.phase << '\n';
  }
  os.flags(flags);
}

double BasisMapping::min_probability() const {
  return probability.empty() ? 1.0
                             : *std::min_element(probability.begin(), probability.end());
}

BasisMapping basis_mapping(const Circuit &c) {
  BasisMapping m;
  const std::uint64_t dim = std::uint64_t{1} << c.num_qubits();
  for (std::uint64_t x = 0; x < dim; ++x) {
    const StateVector s = simulate(c, x);
    const auto y = s.most_likely();
    m.image.push_back(y);
    m.probability.push_back(s.probability(y));
  }
  return m;
}

}  // namespace lasynth
