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

#include <algorithm>
#include <random>

#include "lasynth/circuit.hpp"
#include "lasynth/errors.hpp"
#include "lasynth/operators.hpp"
#include "lasynth/verify.hpp"
#include "oracles.hpp"

using namespace lasynth;

namespace {

// Longest path over the "shares a qubit" DAG, by dynamic programming over
// every earlier gate rather than a per-qubit frontier.
std::size_t longest_path(const Circuit &c) {
  const auto gates = c.gates();
  std::vector<std::size_t> best(gates.size(), 1);
  std::size_t overall = 0;
  for (std::size_t j = 0; j < gates.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      bool shared = false;
      for (Qubit q : gates[j].qubits()) shared = shared || gates[i].acts_on(q);
      if (shared) best[j] = std::max(best[j], best[i] + 1);
    }
    overall = std::max(overall, best[j]);
  }
  return overall;
}

Circuit core(unsigned n) {
  std::vector<Qubit> inputs(n - 1);
  for (Qubit i = 0; i + 1 < n; ++i) inputs[i] = i;
  return build_core(n, core_magnitude(OperatorKind::And, n), {-1, +1, -1, +1}, inputs, n - 1);
}

}  // namespace

TEST_CASE("gates validate arity and operands", "[circuit]") {
  CHECK_THROWS_AS(Gate::two(GateKind::CNOT, 1, 1), CircuitError);
  CHECK_THROWS_AS(Gate::single(GateKind::CNOT, 0), CircuitError);
  CHECK_THROWS_AS(Gate::two(GateKind::X, 0, 1), CircuitError);
  CHECK_THROWS_AS(Gate::single(GateKind::RZ, 0), CircuitError);
  const Gate g = Gate::cnot(2, 0);
  CHECK(g.qubit(0) == 2);
  CHECK(g.qubit(1) == 0);
  CHECK(g.acts_on(0));
  CHECK_FALSE(g.acts_on(1));
}

TEST_CASE("circuits reject out-of-range qubits and duplicate roles", "[circuit]") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add_single(GateKind::X, 2), CircuitError);
  CHECK_THROWS_AS(c.add_cnot(0, 5), CircuitError);
  c.set_label(0, "in0");
  CHECK_THROWS_AS(c.set_label(1, "in0"), CircuitError);
  CHECK_THROWS_AS(c.set_label(3, "out"), CircuitError);
  c.set_label(1, "out");
  CHECK(c.find_label("out") == Qubit{1});
  CHECK_FALSE(c.find_label("out1"));
}

TEST_CASE("gate_counts of cores and the empty circuit", "[circuit]") {
  CHECK(gate_counts(core(3)) == GateCounts{4, 3});
  CHECK(gate_counts(core(4)) == GateCounts{8, 7});
  CHECK(gate_counts(Circuit(3)) == GateCounts{0, 0});
}

TEST_CASE("gate_counts counts identities and rejects macros by index", "[circuit]") {
  Circuit c(2);
  c.add_single(GateKind::I, 0).add_single(GateKind::X, 1).add_single(GateKind::SqrtX, 0);
  c.add_rz(Angle(1, 2), 1).add_cnot(0, 1).add_two(GateKind::ECR, 1, 0);
  CHECK(gate_counts(c) == GateCounts{4, 2});
  c.add_single(GateKind::H, 0);
  try {
    gate_counts(c);
    FAIL("expected NonNativeGateError");
  } catch (const NonNativeGateError &e) {
    CHECK(e.gate_index() == 6);
  }
}

TEST_CASE("depth of simple circuits", "[circuit]") {
  CHECK(depth(Circuit(4)) == 0);
  Circuit serial(2);
  for (int i = 0; i < 3; ++i) serial.add_cnot(0, 1);
  CHECK(depth(serial) == 3);
  Circuit parallel(4);
  parallel.add_single(GateKind::X, 0).add_single(GateKind::X, 1).add_single(GateKind::X, 2);
  CHECK(depth(parallel) == 1);
}

TEST_CASE("depth of the lowered three-qubit AND matches the DAG oracle", "[circuit]") {
  const Circuit c = lower_to_native(
      build_operator(OperatorRequest::canonical(standard_spec(OperatorKind::And), 3)));
  CHECK(depth(c) == longest_path(c));
  CHECK(depth(c) == c.size());  // every gate touches out
}

TEST_CASE("depth agrees with the DAG oracle on random circuits", "[circuit][property]") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Circuit c = oracle::random_circuit(rng, 1 + rng() % 6, 40);
    CHECK(depth(c) == longest_path(c));
    CHECK(depth(c) <= c.size());
  }
}

TEST_CASE("gate_counts distribute over concatenation", "[circuit][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Circuit a = oracle::random_circuit(rng, 4, 20, false);
    const Circuit b = oracle::random_circuit(rng, 3, 20, false);
    CHECK(gate_counts(concat(a, b)) == gate_counts(a) + gate_counts(b));
  }
}

TEST_CASE("H lowers to RZ(pi/2) SX RZ(pi/2)", "[circuit][lowering]") {
  Circuit c(1);
  c.add_single(GateKind::H, 0);
  const Circuit low = lower_to_native(c);
  REQUIRE(low.size() == 3);
  CHECK(low[0].kind() == GateKind::RZ);
  CHECK(low[0].angle().same_representation(Angle(1, 2)));
  CHECK(low[1].kind() == GateKind::SqrtX);
  CHECK(low[2].kind() == GateKind::RZ);
  CHECK(low[2].angle().same_representation(Angle(1, 2)));
  for (const Gate &g : low.gates()) CHECK(g.qubit(0) == 0);
}

TEST_CASE("SX dagger lowers to RZ(pi) SX RZ(pi)", "[circuit][lowering]") {
  Circuit c(1);
  c.add_single(GateKind::SqrtXDagger, 0);
  const Circuit low = lower_to_native(c);
  REQUIRE(low.size() == 3);
  CHECK(low[0].angle().same_representation(Angle::pi()));
  CHECK(low[1].kind() == GateKind::SqrtX);
  CHECK(low[2].angle().same_representation(Angle::pi()));
}

TEST_CASE("SWAP lowers to three CNOTs alternating direction", "[circuit][lowering]") {
  Circuit c(3);
  c.add_two(GateKind::SWAP, 0, 2);
  const Circuit low = lower_to_native(c);
  REQUIRE(low.size() == 3);
  CHECK(low[0].identical(Gate::cnot(0, 2)));
  CHECK(low[1].identical(Gate::cnot(2, 0)));
  CHECK(low[2].identical(Gate::cnot(0, 2)));
}

TEST_CASE("ECR lowering leaves one ECR per CNOT", "[circuit][lowering]") {
  Circuit c(2);
  c.add_cnot(0, 1).add_two(GateKind::SWAP, 0, 1);
  const Circuit low = lower_to_native(c, Basis::ECR);
  CHECK(gate_counts(low).n2 == 4);
  for (const Gate &g : low.gates()) {
    CHECK(is_native(g.kind()));
    CHECK(g.kind() != GateKind::CNOT);
  }
  CHECK(gate_counts(low).n2 == gate_counts(lower_to_native(c)).n2);
}

TEST_CASE("lowering preserves the unitary and is idempotent", "[circuit][lowering][property]") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 120; ++i) {
    const Circuit c = oracle::random_circuit(rng, 1 + rng() % 6, 40);
    for (Basis basis : {Basis::CNOT, Basis::ECR}) {
      const Circuit low = lower_to_native(c, basis);
      for (const Gate &g : low.gates()) REQUIRE(is_native(g.kind()));
      CHECK(equivalent_up_to_global_phase(unitary_of(low), unitary_of(c), 1e-9));
      CHECK(lower_to_native(low, basis).same_gates(low));
    }
  }
}

TEST_CASE("lowering keeps role labels", "[circuit][lowering]") {
  const Circuit c =
      build_operator(OperatorRequest::canonical(standard_spec(OperatorKind::Nand), 3));
  CHECK(lower_to_native(c).labels() == c.labels());
}

TEST_CASE("palindromic core check", "[circuit]") {
  CHECK(is_palindromic_core(core(3)));
  CHECK(is_palindromic_core(core(5)));
  Circuit two(2);
  two.add_rz(Angle(1, 4), 1).add_cnot(0, 1);
  CHECK_FALSE(is_palindromic_core(two));
  CHECK_FALSE(is_palindromic_core(Circuit(2)));
  Circuit with_h(2);
  with_h.add_single(GateKind::H, 1).add_cnot(0, 1).add_single(GateKind::H, 1);
  CHECK_FALSE(is_palindromic_core(with_h));
}

TEST_CASE("relabel and concat", "[circuit]") {
  Circuit c(2);
  c.add_cnot(0, 1).add_rz(Angle(1, 8), 1);
  const std::vector<Qubit> mapping = {3, 1};
  const Circuit r = relabel(c, mapping, 4);
  CHECK(r.num_qubits() == 4);
  CHECK(r[0].identical(Gate::cnot(3, 1)));
  CHECK(r[1].identical(Gate::rz(Angle(1, 8), 1)));
  const Circuit both = concat(c, r);
  CHECK(both.num_qubits() == 4);
  CHECK(both.size() == 4);
}
