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

#include <catch_amalgamated.hpp>

#include "lasynth/catalog.hpp"
#include "lasynth/conventional.hpp"
#include "lasynth/errors.hpp"
#include "lasynth/verify.hpp"
#include "oracles.hpp"

using namespace lasynth;

namespace {

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

std::size_t two_qubit_gates(const Circuit &c) {
  std::size_t n = 0;
  for (const Gate &g : c.gates()) n += g.arity() == 2;
  return n;
}

}  // namespace

TEST_CASE("three-qubit MCX is the six-CNOT Toffoli", "[baseline]") {
  const Circuit c = build_mcx(3, range(2), 2);
  CHECK(two_qubit_gates(c) == 6);
  const Unitary toffoli = oracle::permutation(3, [](std::uint64_t x) {
    return oracle::mcx(x, {0, 1}, 2);
  });
  CHECK(equivalent_up_to_global_phase(unitary_of(c), toffoli, 1e-9));
  // The lowered form keeps the same six two-qubit gates.
  CHECK(gate_counts(lower_to_native(c)).n2 == 6);
}

TEST_CASE("wider MCX matches the classical permutation", "[baseline]") {
  for (unsigned n = 4; n <= 7; ++n) {
    const Circuit c = build_mcx(n, range(n - 1), n - 1);
    const auto controls = urange(n - 1);
    const BasisMapping m = basis_mapping(c);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      CHECK(m.image[x] == oracle::mcx(x, controls, n - 1));
    }
    CHECK(m.min_probability() >= 1 - 1e-10);
  }
  // Exact up to global phase, not just as a permutation.
  const Unitary mcx4 = oracle::permutation(4, [](std::uint64_t x) {
    return oracle::mcx(x, {0, 1, 2}, 3);
  });
  CHECK(equivalent_up_to_global_phase(unitary_of(build_mcx(4, range(3), 3)), mcx4));
}

TEST_CASE("MCX two-qubit gate count grows with n", "[baseline]") {
  std::size_t previous = 0;
  for (unsigned n = 3; n <= 9; ++n) {
    const std::size_t count = two_qubit_gates(build_mcx(n, range(n - 1), n - 1));
    CHECK(count >= previous);
    previous = count;
  }
}

TEST_CASE("MCX argument errors", "[baseline]") {
  CHECK_THROWS_AS(build_mcx(2, range(1), 1), UnsupportedOperatorError);
  CHECK_THROWS_AS(build_mcx(4, range(2), 3), CircuitError);
  const std::vector<Qubit> dup = {0, 1};
  CHECK_THROWS_AS(build_mcx(3, dup, 1), CircuitError);
}

TEST_CASE("controlled X powers are exact", "[baseline]") {
  for (unsigned m = 1; m <= 3; ++m) {
    const auto controls = range(m);
    const std::vector<unsigned> ctl = urange(m);
    const Circuit half = build_controlled_x_power(controls, m, Angle(1, 2), m + 1);
    CHECK(equivalent_up_to_global_phase(unitary_of(half),
                                        oracle::controlled(m + 1, ctl, m, oracle::sx_matrix())));
  }
  CHECK_THROWS_AS(build_controlled_x_power({}, 0, Angle(1, 2), 1), CircuitError);
}

TEST_CASE("conventional operators: small truth table rows", "[baseline]") {
  const Circuit orc = build_conventional(Construct::Or, 3);
  CHECK(simulate(orc, 0b000).probability_one(2) <= 1e-10);
  const Circuit nand = build_conventional(Construct::Nand, 3);
  CHECK(simulate(nand, 0b011).probability_one(2) <= 1e-10);
}

TEST_CASE("conventional operators compute their functions", "[baseline]") {
  for (Construct kind : {Construct::And, Construct::Nand, Construct::Or, Construct::Nor,
                         Construct::Implication, Construct::Inhibition}) {
    const unsigned max_n = supported(kind, 4) ? 5 : 3;
    for (unsigned n = 3; n <= max_n; ++n) {
      const Circuit c = build_conventional(kind, n);
      const auto inputs = range(n - 1);
      for (const auto &[bits, row] : truth_table(c, n - 1, 0, inputs)) {
        INFO(construct_name(kind) << " n=" << n << " inputs=" << bits);
        CHECK(row.out_bit == (evaluate(*as_operator(kind), bits, n - 1) ? 1 : 0));
        CHECK(row.probability >= 1 - 1e-10);
      }
      // Inputs are restored.
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
        const StateVector s = simulate(c, bits);
        const auto y = s.most_likely();
        CHECK((y & ((std::uint64_t{1} << (n - 1)) - 1)) == bits);
      }
    }
  }
  CHECK_THROWS_AS(build_conventional(Construct::Inhibition, 4), UnsupportedOperatorError);
}

TEST_CASE("conventional phase operator is a controlled Z", "[baseline]") {
  const Circuit c = build_conventional(Construct::Mcz, 3);
  Unitary cz(8);
  for (std::uint64_t x = 0; x < 8; ++x) cz(x, x) = x == 7 ? -1.0 : 1.0;
  CHECK(equivalent_up_to_global_phase(unitary_of(c), cz));
}

TEST_CASE("conventional Fredkin is a controlled SWAP", "[baseline]") {
  for (unsigned n = 3; n <= 4; ++n) {
    const Circuit c = build_conventional(Construct::Fredkin, n);
    const std::uint64_t controls = (std::uint64_t{1} << (n - 2)) - 1;
    const Unitary cswap = oracle::permutation(n, [&](std::uint64_t x) {
      if ((x & controls) != controls) return x;
      const bool a = oracle::bit(x, n - 2);
      const bool b = oracle::bit(x, n - 1);
      if (a == b) return x;
      return x ^ (std::uint64_t{3} << (n - 2));
    });
    CHECK(equivalent_up_to_global_phase(unitary_of(c), cswap));
  }
}

TEST_CASE("conventional controlled-V", "[baseline]") {
  const Circuit two = build_conventional(Construct::ControlledV, 2);
  CHECK(equivalent_up_to_global_phase(unitary_of(two),
                                      oracle::controlled(2, {0}, 1, oracle::sx_matrix())));
  CHECK(probability_equivalent(unitary_of(two),
                               oracle::controlled(2, {0}, 1, oracle::sx_matrix())));
  for (unsigned n = 3; n <= 5; ++n) {
    CHECK(equivalent_up_to_global_phase(
        unitary_of(build_conventional(Construct::ControlledV, n)),
        oracle::controlled(n, urange(n - 1), n - 1, oracle::sx_matrix())));
  }
}

TEST_CASE("conventional Miller matches the straight permutation", "[baseline]") {
  for (unsigned n = 3; n <= 5; ++n) {
    const BasisMapping conventional = basis_mapping(build_conventional(Construct::Miller, n));
    const BasisMapping straight = basis_mapping(build_straight(Construct::Miller, n));
    CHECK(conventional.image == straight.image);
    CHECK(conventional.min_probability() >= 1 - 1e-10);
  }
  CHECK(simulate(build_conventional(Construct::Miller, 3), 0b011).probability(0b100) >=
        1 - 1e-10);
}

TEST_CASE("special baseline arity errors", "[baseline]") {
  const std::array<Qubit, 1> one = {3};
  const std::array<Qubit, 2> two = {2, 3};
  CHECK_THROWS_AS(build_conventional_special(BaselineKind::Fredkin, 4, range(2), one),
                  CircuitError);
  CHECK_THROWS_AS(build_conventional_special(BaselineKind::Miller, 4, range(2), two),
                  CircuitError);
  CHECK_THROWS_AS(build_conventional_special(BaselineKind::And, 3, range(2), one),
                  UnsupportedOperatorError);
  CHECK_THROWS_AS(build_conventional_special(BaselineKind::Miller, 2, range(1), one),
                  UnsupportedOperatorError);
}
