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

#include "lasynth/conventional.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "lasynth/errors.hpp"

namespace lasynth {

namespace {

void require_distinct(std::span<const Qubit> a, std::span<const Qubit> b) {
  std::set<Qubit> seen;
  for (Qubit q : a) {
    if (!seen.insert(q).second) throw CircuitError("qubit " + std::to_string(q) + " repeated");
  }
  for (Qubit q : b) {
    if (!seen.insert(q).second) throw CircuitError("qubit " + std::to_string(q) + " repeated");
  }
}

unsigned width_for(std::span<const Qubit> a, std::span<const Qubit> b,
                   std::optional<unsigned> requested) {
  Qubit hi = 0;
  for (Qubit q : a) hi = std::max(hi, q);
  for (Qubit q : b) hi = std::max(hi, q);
  if (requested) {
    if (*requested <= hi) throw CircuitError("requested width too small");
    return *requested;
  }
  return hi + 1;
}

void toffoli(Circuit &c, Qubit a, Qubit b, Qubit t) {
  const Angle t_gate(1, 4);
  c.add_single(GateKind::H, t);
  c.add_cnot(b, t);
  c.add_rz(-t_gate, t);
  c.add_cnot(a, t);
  c.add_rz(t_gate, t);
  c.add_cnot(b, t);
  c.add_rz(-t_gate, t);
  c.add_cnot(a, t);
  c.add_rz(t_gate, b);
  c.add_rz(t_gate, t);
  c.add_single(GateKind::H, t);
  c.add_cnot(a, b);
  c.add_rz(t_gate, a);
  c.add_rz(-t_gate, b);
  c.add_cnot(a, b);
}

void controlled_power(Circuit &c, std::span<const Qubit> controls, Qubit t, const Angle &phase) {
  const bool full_flip = phase == Angle::pi();
  if (controls.size() == 1) {
    if (full_flip) {
      c.add_cnot(controls[0], t);
      return;
    }
    const Angle half = phase.halved();
    c.add_single(GateKind::H, t);
    c.add_rz(half, controls[0]);
    c.add_rz(half, t);
    c.add_cnot(controls[0], t);
    c.add_rz(-half, t);
    c.add_cnot(controls[0], t);
    c.add_single(GateKind::H, t);
    return;
  }
  if (controls.size() == 2 && full_flip) {
    toffoli(c, controls[0], controls[1], t);
    return;
  }
  const Qubit last = controls.back();
  const auto rest = controls.first(controls.size() - 1);
  const Angle half = phase.halved();
  const std::array<Qubit, 1> last_only = {last};
  controlled_power(c, last_only, t, half);
  controlled_power(c, rest, last, Angle::pi());
  controlled_power(c, last_only, t, -half);
  controlled_power(c, rest, last, Angle::pi());
  controlled_power(c, rest, t, half);
}

void x_all(Circuit &c, std::span<const Qubit> qs) {
  for (Qubit q : qs) c.add_single(GateKind::X, q);
}

}  // namespace

std::string_view baseline_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::Mcx: return "MCX";
    case BaselineKind::And: return "AND";
    case BaselineKind::Nand: return "NAND";
    case BaselineKind::Or: return "OR";
    case BaselineKind::Nor: return "NOR";
    case BaselineKind::Implication: return "IMPLICATION";
    case BaselineKind::Inhibition: return "INHIBITION";
    case BaselineKind::ControlledV: return "CV";
    case BaselineKind::ControlledVDagger: return "CVDG";
    case BaselineKind::Fredkin: return "FREDKIN";
    case BaselineKind::Miller: return "MILLER";
  }
  return "?";
}

Circuit build_controlled_x_power(std::span<const Qubit> controls, Qubit target,
                                 const Angle &phase, unsigned num_qubits) {
  if (controls.empty()) throw CircuitError("controlled gate without controls");
  const std::array<Qubit, 1> t = {target};
  require_distinct(controls, t);
  Circuit c(width_for(controls, t, num_qubits));
  controlled_power(c, controls, target, phase);
  return c;
}

Circuit build_mcx(unsigned n, std::span<const Qubit> controls, Qubit target,
                  std::optional<unsigned> num_qubits) {
  if (n < 3) throw UnsupportedOperatorError("MCX baseline needs n >= 3");
  if (controls.size() + 1 != n) {
    throw CircuitError("MCX of n = " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                       " controls");
  }
  const std::array<Qubit, 1> t = {target};
  require_distinct(controls, t);
  Circuit c(width_for(controls, t, num_qubits));
  controlled_power(c, controls, target, Angle::pi());
  return c;
}

Circuit build_conventional_operator(OperatorKind kind, unsigned n, std::span<const Qubit> inputs,
                                    Qubit out, std::optional<unsigned> num_qubits) {
  if ((kind == OperatorKind::Implication || kind == OperatorKind::Inhibition) && n != 3) {
    throw UnsupportedOperatorError(std::string(operator_name(kind)) +
                                   " is only defined for n = 3");
  }
  const Circuit mcx = build_mcx(n, inputs, out, num_qubits);
  Circuit c(mcx.num_qubits());
  const std::array<Qubit, 1> in1 = {inputs.size() > 1 ? inputs[1] : inputs[0]};
  switch (kind) {
    case OperatorKind::And:
      c.append(mcx);
      break;
    case OperatorKind::Nand:
      c.append(mcx);
      c.add_single(GateKind::X, out);
      break;
    case OperatorKind::Or:
      x_all(c, inputs);
      c.append(mcx);
      x_all(c, inputs);
      c.add_single(GateKind::X, out);
      break;
    case OperatorKind::Nor:
      x_all(c, inputs);
      c.append(mcx);
      x_all(c, inputs);
      break;
    case OperatorKind::Implication:
      x_all(c, in1);
      c.append(mcx);
      x_all(c, in1);
      c.add_single(GateKind::X, out);
      break;
    case OperatorKind::Inhibition:
      x_all(c, in1);
      c.append(mcx);
      x_all(c, in1);
      break;
    case OperatorKind::Mcz:
      c.add_single(GateKind::H, out);
      c.append(mcx);
      c.add_single(GateKind::H, out);
      break;
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) c.set_label(inputs[i], "in" + std::to_string(i));
  c.set_label(out, "out");
  return c;
}

Circuit build_conventional_special(BaselineKind kind, unsigned n, std::span<const Qubit> inputs,
                                   std::span<const Qubit> outs,
                                   std::optional<unsigned> num_qubits) {
  auto arity_error = [&](std::size_t want_in, std::size_t want_out) {
    return CircuitError(std::string(baseline_name(kind)) + " of n = " + std::to_string(n) +
                        " needs " + std::to_string(want_in) + " inputs and " +
                        std::to_string(want_out) + " outputs");
  };
  require_distinct(inputs, outs);
  const unsigned width = width_for(inputs, outs, num_qubits);
  Circuit c(width);
  switch (kind) {
    case BaselineKind::ControlledV:
    case BaselineKind::ControlledVDagger: {
      if (n < 2) throw UnsupportedOperatorError("controlled-V needs n >= 2");
      if (inputs.size() + 1 != n || outs.size() != 1) throw arity_error(n - 1, 1);
      const Angle phase(kind == BaselineKind::ControlledV ? 1 : -1, 2);
      if (n == 2) {
        c.add_two(kind == BaselineKind::ControlledV ? GateKind::MacroV : GateKind::MacroVDagger,
                  inputs[0], outs[0]);
      } else {
        c.append(build_controlled_x_power(inputs, outs[0], phase, width));
      }
      break;
    }
    case BaselineKind::Fredkin: {
      if (n < 3) throw UnsupportedOperatorError("Fredkin needs n >= 3");
      if (inputs.size() + 2 != n || outs.size() != 2) throw arity_error(n - 2, 2);
      std::vector<Qubit> controls(inputs.begin(), inputs.end());
      controls.push_back(outs[0]);
      c.add_cnot(outs[1], outs[0]);
      c.append(build_mcx(n, controls, outs[1], width));
      c.add_cnot(outs[1], outs[0]);
      break;
    }
    case BaselineKind::Miller: {
      if (n < 3) throw UnsupportedOperatorError("Miller needs n >= 3");
      if (inputs.size() + 1 != n || outs.size() != 1) throw arity_error(n - 1, 1);
      for (Qubit q : inputs) c.add_cnot(outs[0], q);
      c.append(build_mcx(n, inputs, outs[0], width));
      for (Qubit q : inputs) c.add_cnot(outs[0], q);
      break;
    }
    default:
      throw UnsupportedOperatorError(std::string(baseline_name(kind)) +
                                     " is not a special baseline kind");
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) c.set_label(inputs[i], "in" + std::to_string(i));
  if (outs.size() == 1) {
    c.set_label(outs[0], "out");
  } else {
    for (std::size_t i = 0; i < outs.size(); ++i) c.set_label(outs[i], "out" + std::to_string(i));
  }
  return c;
}

}  // namespace lasynth
