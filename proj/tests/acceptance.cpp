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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lasynth/catalog.hpp"
#include "lasynth/conventional.hpp"
#include "lasynth/coupling_map.hpp"
#include "lasynth/operators.hpp"
#include "lasynth/placement.hpp"
#include "lasynth/router.hpp"
#include "lasynth/statevector.hpp"
#include "lasynth/tqc.hpp"
#include "lasynth/verify.hpp"
#include "oracles.hpp"

using namespace lasynth;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTruthTol = 1e-10;
constexpr double kUnitaryTol = 1e-9;

// Collects failures of one criterion; a criterion passes when none were recorded.
class Check {
 public:
  void expect(bool ok, const std::string &what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string &s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failed_ > 0) {
      os << ", " << failed_ << " failed:";
      for (const auto &f : failures_) os << " [" << f << "]";
    }
    if (!notes_.empty()) os << "; " << notes_;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::vector<Qubit> range(unsigned n) {
  std::vector<Qubit> v(n);
  for (Qubit i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<unsigned> urange(unsigned n) {
  std::vector<unsigned> v(n);
  for (unsigned i = 0; i < n; ++i) v[i] = i;
  return v;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

void truth_table_matches(Check &check, OperatorKind kind, unsigned n) {
  const Circuit c = build_operator(OperatorRequest::canonical(standard_spec(kind), n));
  const auto inputs = range(n - 1);
  const auto table = truth_table(c, n - 1, 0, inputs);
  check.expect(table.size() == (std::size_t{1} << (n - 1)),
               std::string(operator_name(kind)) + " row count");
  for (const auto &[bits, row] : table) {
    const int want = evaluate(kind, bits, n - 1) ? 1 : 0;
    check.expect(row.out_bit == want && row.probability >= 1 - kTruthTol,
                 std::string(operator_name(kind)) + " n=" + std::to_string(n) +
                     " inputs=" + std::to_string(bits));
  }
}

void criterion_truth_tables(Check &check) {
  const auto start = std::chrono::steady_clock::now();
  for (OperatorKind k : {OperatorKind::And, OperatorKind::Nand, OperatorKind::Or,
                         OperatorKind::Nor, OperatorKind::Implication, OperatorKind::Inhibition}) {
    truth_table_matches(check, k, 3);
  }
  for (OperatorKind k : {OperatorKind::And, OperatorKind::Nand, OperatorKind::Or,
                         OperatorKind::Nor}) {
    for (unsigned n = 4; n <= 7; ++n) truth_table_matches(check, k, n);
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 10.0, "runtime " + fmt_seconds(elapsed));
  check.note("runtime " + fmt_seconds(elapsed));
}

void criterion_sqrt_x_rows(Check &check) {
  const std::set<OperatorKind> pass = {OperatorKind::And, OperatorKind::Nand,
                                       OperatorKind::Implication, OperatorKind::Inhibition};
  const std::set<OperatorKind> fail = {OperatorKind::Or, OperatorKind::Nor, OperatorKind::Mcz};
  for (OperatorKind k : pass) {
    check.expect(check_operator(standard_spec(k, Variant::SqrtX), 3).pass,
                 std::string(operator_name(k)) + " should pass");
  }
  for (OperatorKind k : fail) {
    const OperatorCheck r = check_operator(standard_spec(k, Variant::SqrtX), 3);
    check.expect(!r.pass && r.failing_rows >= 1, std::string(operator_name(k)) + " should fail");
  }
}

void criterion_core_counts(Check &check) {
  for (unsigned n = 3; n <= 12; ++n) {
    const Circuit core = build_core(n, core_magnitude(OperatorKind::And, n), {-1, +1, -1, +1},
                                    range(n - 1), n - 1);
    const GateCounts counts = gate_counts(core);
    const std::size_t half = std::size_t{1} << (n - 1);
    const std::string tag = "n=" + std::to_string(n);
    check.expect(counts.n1 == half && counts.n2 == half - 1, tag + " counts");
    check.expect(is_palindromic_core(core), tag + " palindrome");
    if (n == 3) check.expect(counts.n1 == 4 && counts.n2 == 3, "anchor (4, 3)");
    if (n == 4) check.expect(counts.n1 == 8 && counts.n2 == 7, "anchor (8, 7)");
  }
}

struct CostRow {
  const char *kind;
  std::size_t n1, n2, xc, d, total;
};

void criterion_tqc_arithmetic(Check &check) {
  // Complete four-qubit reference rows of the heavy-hex cost comparison.
  static constexpr CostRow kConventional[] = {
      {"AND", 146, 29, 5, 108, 288},     {"NAND", 105, 20, 2, 83, 210},
      {"OR", 102, 20, 2, 80, 204},       {"NOR", 103, 20, 2, 83, 208},
      {"IMPLICATION", 49, 9, 1, 39, 98}, {"INHIBITION", 50, 9, 1, 39, 99},
      {"CV", 147, 29, 5, 110, 291},      {"FREDKIN", 189, 40, 8, 115, 352},
      {"MILLER", 151, 29, 3, 113, 296},
  };
  static constexpr CostRow kStraight[] = {
      {"NAND", 52, 7, 0, 41, 100},      {"OR", 52, 7, 0, 41, 100},
      {"NOR", 52, 7, 0, 41, 100},       {"IMPLICATION", 28, 3, 0, 21, 52},
      {"INHIBITION", 28, 3, 0, 21, 52}, {"CV", 53, 7, 0, 42, 102},
      {"FREDKIN", 56, 9, 0, 46, 111},   {"MILLER", 70, 13, 0, 58, 141},
  };
  for (const CostRow &r : kConventional) {
    check.expect(tqc(r.n1, r.n2, r.xc, r.d) == r.total, std::string("conventional ") + r.kind);
  }
  for (const CostRow &r : kStraight) {
    check.expect(tqc(r.n1, r.n2, r.xc, r.d) == r.total, std::string("straight ") + r.kind);
  }
}

void criterion_layout(Check &check) {
  const CouplingMap map = heavy_hex_127();
  check.expect(map.neighbors(4) == std::vector<Qubit>{3, 5, 15}, "neighbors(4)");
  check.expect(map.neighbors(0) == std::vector<Qubit>{1, 14}, "neighbors(0)");
  check.expect(find_star_placement(map, 3).has_value(), "star n=3");
  check.expect(find_star_placement(map, 4).has_value(), "star n=4");
  check.expect(!find_star_placement(map, 5).has_value(), "no star n=5");
  for (unsigned n : {3U, 4U}) {
    const Placement p = *find_star_placement(map, n);
    for (Construct c : comparison_constructs()) {
      if (!supported(c, n)) continue;
      const RoutingResult r = route(build_straight(c, n), map, p);
      check.expect(r.xc == 0,
                   std::string(construct_name(c)) + " n=" + std::to_string(n) + " xc=0");
    }
  }
}

Circuit single_gate(GateKind kind, unsigned width, Qubit a, Qubit b = 0) {
  Circuit c(width);
  if (arity(kind) == 1) {
    c.add_single(kind, a);
  } else {
    c.add_two(kind, a, b);
  }
  return c;
}

std::array<Complex, 4> adjoint(std::array<Complex, 4> m) {
  std::swap(m[1], m[2]);
  for (auto &z : m) z = std::conj(z);
  return m;
}

Unitary ecr_oracle() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i = oracle::kI;
  // Operand 0 is the low bit of the local index.
  const Complex m[4][4] = {{0, r, 0, i * r}, {r, 0, -i * r, 0}, {0, i * r, 0, r},
                           {-i * r, 0, r, 0}};
  Unitary u(4);
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) u(row, col) = m[row][col];
  }
  return u;
}

void criterion_decompositions(Check &check) {
  const Unitary h_target = oracle::embed1(1, 0, oracle::h_matrix());
  const Unitary h_seq = oracle::multiply(
      oracle::embed1(1, 0, oracle::rz_matrix(kPi / 2)),
      oracle::multiply(oracle::embed1(1, 0, oracle::sx_matrix()),
                       oracle::embed1(1, 0, oracle::rz_matrix(kPi / 2))));
  check.expect(equivalent_up_to_global_phase(h_seq, h_target, kUnitaryTol), "H sequence oracle");
  check.expect(equivalent_up_to_global_phase(
                   unitary_of(lower_to_native(single_gate(GateKind::H, 1, 0))), h_target,
                   kUnitaryTol),
               "H lowering");

  const Unitary sxdg_target = oracle::embed1(1, 0, adjoint(oracle::sx_matrix()));
  const Unitary sxdg_seq = oracle::multiply(
      oracle::embed1(1, 0, oracle::rz_matrix(kPi)),
      oracle::multiply(oracle::embed1(1, 0, oracle::sx_matrix()),
                       oracle::embed1(1, 0, oracle::rz_matrix(kPi))));
  check.expect(equivalent_up_to_global_phase(sxdg_seq, sxdg_target, kUnitaryTol),
               "SX dagger sequence oracle");
  check.expect(equivalent_up_to_global_phase(
                   unitary_of(lower_to_native(single_gate(GateKind::SqrtXDagger, 1, 0))),
                   sxdg_target, kUnitaryTol),
               "SX dagger lowering");

  const Unitary swap_target = oracle::permutation(2, [](std::uint64_t x) {
    return ((x & 1U) << 1) | ((x >> 1) & 1U);
  });
  const Circuit swap_low = lower_to_native(single_gate(GateKind::SWAP, 2, 0, 1));
  check.expect(gate_counts(swap_low).n2 == 3, "SWAP has three CNOTs");
  check.expect(equivalent_up_to_global_phase(unitary_of(swap_low), swap_target, kUnitaryTol),
               "SWAP lowering");

  const Circuit toffoli = build_mcx(3, range(2), 2);
  check.expect(gate_counts(lower_to_native(toffoli)).n2 == 6, "Toffoli has six CNOTs");
  const Unitary toffoli_target =
      oracle::permutation(3, [](std::uint64_t x) { return oracle::mcx(x, {0, 1}, 2); });
  check.expect(equivalent_up_to_global_phase(unitary_of(toffoli), toffoli_target, kUnitaryTol),
               "Toffoli");
  check.expect(equivalent_up_to_global_phase(unitary_of(lower_to_native(toffoli)),
                                             toffoli_target, kUnitaryTol),
               "lowered Toffoli");

  const Unitary cnot_target =
      oracle::permutation(2, [](std::uint64_t x) { return oracle::mcx(x, {0}, 1); });
  // CNOT(c=0, t=1) = ECR(0, 1) · SX_t · X_c · RZ(π/2)_c, rightmost first.
  const Unitary ecr_seq = oracle::multiply(
      ecr_oracle(),
      oracle::multiply(
          oracle::embed1(2, 1, oracle::sx_matrix()),
          oracle::multiply(oracle::embed1(2, 0, {0.0, 1.0, 1.0, 0.0}),
                           oracle::embed1(2, 0, oracle::rz_matrix(kPi / 2)))));
  check.expect(equivalent_up_to_global_phase(ecr_seq, cnot_target, kUnitaryTol),
               "CNOT-ECR identity oracle");
  const Circuit ecr_low = lower_to_native(single_gate(GateKind::CNOT, 2, 0, 1), Basis::ECR);
  check.expect(equivalent_up_to_global_phase(unitary_of(ecr_low), cnot_target, kUnitaryTol),
               "ECR lowering");
  check.expect(equivalent_up_to_global_phase(unitary_of(single_gate(GateKind::ECR, 2, 0, 1)),
                                             ecr_oracle(), kUnitaryTol),
               "ECR matrix");
}

bool phase_close(double phase, double want) {
  return std::abs(std::remainder(phase - want, 2 * kPi)) < kUnitaryTol;
}

void criterion_composed(Check &check) {
  for (unsigned n = 2; n <= 6; ++n) {
    const std::uint64_t all = (std::uint64_t{1} << (n - 1)) - 1;
    const std::uint64_t one = std::uint64_t{1} << (n - 1);
    for (const bool dagger : {false, true}) {
      const Circuit c = dagger ? compose_controlled_v_dagger(n, range(n - 1), n - 1)
                               : compose_controlled_v(n, range(n - 1), n - 1);
      const StateVector s = simulate(c, all);
      const std::string tag = std::string(dagger ? "CVDG" : "CV") + " n=" + std::to_string(n);
      check.expect(std::abs(s.probability(all) - 0.5) < kUnitaryTol, tag + " p0");
      check.expect(std::abs(s.probability(all | one) - 0.5) < kUnitaryTol, tag + " p1");
      check.expect(phase_close(std::arg(s[all | one] / s[all]), dagger ? kPi / 2 : 3 * kPi / 2),
                   tag + " relative phase");
    }
  }
  for (unsigned n = 3; n <= 4; ++n) {
    const BasisMapping m = basis_mapping(build_straight(Construct::Fredkin, n));
    const unsigned out0 = n - 2;
    const unsigned out1 = n - 1;
    const std::uint64_t controls = (std::uint64_t{1} << (n - 2)) - 1;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      std::uint64_t want = x;
      if ((x & controls) == controls && oracle::bit(x, out0) != oracle::bit(x, out1)) {
        want = x ^ (std::uint64_t{1} << out0) ^ (std::uint64_t{1} << out1);
      }
      check.expect(m.image[x] == want, "Fredkin n=" + std::to_string(n));
    }
    check.expect(m.min_probability() >= 1 - kTruthTol, "Fredkin exact n=" + std::to_string(n));
  }
  // Basis labels read |out in1 in0>.
  const Circuit miller = build_straight(Construct::Miller, 3);
  check.expect(simulate(miller, 0b011).probability(0b100) >= 1 - kTruthTol, "Miller |0,11>");
  check.expect(simulate(miller, 0b100).probability(0b011) >= 1 - kTruthTol, "Miller |1,00>");
}

void criterion_comparison(Check &check) {
  const auto start = std::chrono::steady_clock::now();
  const CouplingMap map = heavy_hex_127();
  for (unsigned n : {3U, 4U}) {
    const auto rows = compare(comparison_constructs(), n, map);
    std::ostringstream ratios;
    ratios << "n=" << n << " ratios";
    for (const ComparisonRow &row : rows) {
      check.expect(row.straight.total < row.conventional.total,
                   std::string(construct_name(row.construct)) + " n=" + std::to_string(n));
      char buf[16];
      std::snprintf(buf, sizeof buf, "%.2f", row.ratio);
      ratios << ' ' << construct_name(row.construct) << '=' << buf;
    }
    check.expect(rows.size() == (n == 3 ? 9U : 7U), "row count n=" + std::to_string(n));
    check.note(ratios.str());
  }
  const double elapsed = seconds_since(start);
  check.expect(elapsed < 30.0, "runtime " + fmt_seconds(elapsed));
  check.note("runtime " + fmt_seconds(elapsed));
}

void criterion_doubling(Check &check) {
  for (Construct c : {Construct::And, Construct::Nand, Construct::Or, Construct::Nor,
                      Construct::Mcz, Construct::ControlledV, Construct::ControlledVDagger,
                      Construct::Fredkin, Construct::Miller}) {
    for (unsigned n = 4; n <= 8; ++n) {
      const TqcPrediction p = predict_tqc(
          analyze_construct_structural(c, n - 1, Style::Straight, Basis::CNOT));
      const TqcReport actual = analyze_construct_structural(c, n, Style::Straight, Basis::CNOT);
      const std::string tag = std::string(construct_name(c)) + " n=" + std::to_string(n);
      check.expect(actual.core && p.core == *actual.core, tag + " core");
      check.expect(p.n1 == actual.n1 && p.n2 == actual.n2 && p.d == actual.d &&
                       p.total == actual.total,
                   tag + " totals");
    }
  }
}

void criterion_random_soundness(Check &check) {
  std::mt19937_64 rng(20260101);
  const CouplingMap heavy = heavy_hex_127();
  const std::vector<CouplingMap> small = {path_map(6), ring_map(6)};
  constexpr unsigned kCases = 150;
  for (unsigned i = 0; i < kCases; ++i) {
    const unsigned qubits = 2 + static_cast<unsigned>(rng() % 5);
    const Circuit c = oracle::random_circuit(rng, qubits, 40);
    const Basis basis = i % 2 == 0 ? Basis::CNOT : Basis::ECR;
    const Circuit lowered = lower_to_native(c, basis);
    const std::string tag = "case " + std::to_string(i);
    check.expect(equivalent_up_to_global_phase(unitary_of(lowered), unitary_of(c), kUnitaryTol),
                 tag + " lowering");
    const CouplingMap &map = i % 3 == 0 ? heavy : small[i % 2];
    const Placement p = random_connected_placement(map, qubits, rng());
    const RoutingResult r = route(lowered, map, p);
    check.expect(routed_equivalent(c, r, kUnitaryTol), tag + " routing");
  }
  check.note(std::to_string(kCases) + " circuits");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<void(Check &)>>> criteria = {
      {"truth tables", criterion_truth_tables},
      {"sqrt-X variant pass/fail", criterion_sqrt_x_rows},
      {"core structural counts", criterion_core_counts},
      {"TQC arithmetic", criterion_tqc_arithmetic},
      {"layout", criterion_layout},
      {"decomposition oracles", criterion_decompositions},
      {"composed gates", criterion_composed},
      {"comparison ordering", criterion_comparison},
      {"doubling prediction", criterion_doubling},
      {"random lowering/routing soundness", criterion_random_soundness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    std::string error;
    try {
      criteria[i].second(check);
    } catch (const std::exception &e) {
      error = e.what();
    }
    const bool ok = error.empty() && check.passed();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << (error.empty() ? check.summary() : "exception: " + error) << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
