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

#include "lasynth/operators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "lasynth/errors.hpp"
#include "lasynth/statevector.hpp"

namespace lasynth {

namespace {

constexpr std::array<std::pair<OperatorKind, std::string_view>, 7> kOperatorNames = {{
    {OperatorKind::And, "AND"},
    {OperatorKind::Nand, "NAND"},
    {OperatorKind::Or, "OR"},
    {OperatorKind::Nor, "NOR"},
    {OperatorKind::Implication, "IMPLICATION"},
    {OperatorKind::Inhibition, "INHIBITION"},
    {OperatorKind::Mcz, "MCZ"},
}};

using K = OperatorKind;
using V = Variant;
using S = SuperpositionGate;
using A = AuxGate;

// clang-format off
const std::array<OperatorSpec, 14> kStandardSpecs = {{
    // H / H superposition pair
    {K::And,         V::Hadamard, {-1, +1, -1, +1}, S::H, A::I, A::I,         S::H, InitialOut::Zero,   true},
    {K::Nand,        V::Hadamard, {-1, +1, -1, +1}, S::H, A::I, A::RzMinusPi, S::H, InitialOut::Zero,   true},
    {K::Or,          V::Hadamard, {+1, +1, +1, +1}, S::H, A::I, A::RzPlusPi,  S::H, InitialOut::Zero,   true},
    {K::Nor,         V::Hadamard, {+1, +1, +1, +1}, S::H, A::I, A::I,         S::H, InitialOut::Zero,   true},
    {K::Implication, V::Hadamard, {-1, -1, +1, +1}, S::H, A::I, A::RzMinusPi, S::H, InitialOut::Zero,   true},
    {K::Inhibition,  V::Hadamard, {-1, -1, +1, +1}, S::H, A::I, A::I,         S::H, InitialOut::Zero,   true},
    {K::Mcz,         V::Hadamard, {+1, +1, -1, -1}, S::H, A::I, A::I,         S::H, InitialOut::Either, true},
    // √X / √X† superposition pair
    {K::And,         V::SqrtX, {+1, +1, -1, -1}, S::SqrtX, A::I, A::I,         S::SqrtXDagger, InitialOut::Zero,   true},
    {K::Nand,        V::SqrtX, {+1, +1, -1, -1}, S::SqrtX, A::I, A::RzMinusPi, S::SqrtXDagger, InitialOut::Zero,   true},
    {K::Or,          V::SqrtX, {+1, +1, +1, +1}, S::SqrtX, A::I, A::RzPlusPi,  S::SqrtXDagger, InitialOut::Zero,   false},
    {K::Nor,         V::SqrtX, {+1, +1, +1, +1}, S::SqrtX, A::I, A::I,         S::SqrtXDagger, InitialOut::Zero,   false},
    {K::Implication, V::SqrtX, {+1, -1, +1, -1}, S::SqrtX, A::I, A::RzMinusPi, S::SqrtXDagger, InitialOut::Zero,   true},
    {K::Inhibition,  V::SqrtX, {+1, -1, +1, -1}, S::SqrtX, A::I, A::I,         S::SqrtXDagger, InitialOut::Zero,   true},
    {K::Mcz,         V::SqrtX, {+1, +1, -1, -1}, S::SqrtX, A::I, A::I,         S::SqrtXDagger, InitialOut::Either, false},
}};
// clang-format on

void emit_superposition(Circuit &c, SuperpositionGate g, Qubit q) {
  switch (g) {
    case S::H: c.add_single(GateKind::H, q); break;
    case S::SqrtX: c.add_single(GateKind::SqrtX, q); break;
    case S::SqrtXDagger: c.add_single(GateKind::SqrtXDagger, q); break;
  }
}

void emit_aux(Circuit &c, AuxGate g, Qubit q) {
  switch (g) {
    case A::I: break;
    case A::RzPlusPi: c.add_rz(Angle::pi(), q); break;
    case A::RzMinusPi: c.add_rz(-Angle::pi(), q); break;
  }
}

unsigned width_for(std::span<const Qubit> a, std::initializer_list<Qubit> b,
                   std::optional<unsigned> requested) {
  Qubit hi = 0;
  for (Qubit q : a) hi = std::max(hi, q);
  for (Qubit q : b) hi = std::max(hi, q);
  const unsigned need = hi + 1;
  if (requested) {
    if (*requested < need) {
      throw CircuitError("requested width " + std::to_string(*requested) +
                         " is smaller than the highest operand index");
    }
    return *requested;
  }
  return need;
}

void require_distinct(std::span<const Qubit> a, std::initializer_list<Qubit> b) {
  std::set<Qubit> seen;
  auto check = [&seen](Qubit q) {
    if (!seen.insert(q).second) {
      throw CircuitError("qubit " + std::to_string(q) + " used in two roles");
    }
  };
  for (Qubit q : a) check(q);
  for (Qubit q : b) check(q);
}

void label_roles(Circuit &c, std::span<const Qubit> inputs, Qubit out) {
  for (std::size_t i = 0; i < inputs.size(); ++i) c.set_label(inputs[i], "in" + std::to_string(i));
  c.set_label(out, "out");
}

std::string_view sp_token(SuperpositionGate g) {
  switch (g) {
    case S::H: return "H";
    case S::SqrtX: return "SX";
    case S::SqrtXDagger: return "SXDG";
  }
  return "?";
}

std::string_view ax_token(AuxGate g) {
  switch (g) {
    case A::I: return "I";
    case A::RzPlusPi: return "RZ(+pi)";
    case A::RzMinusPi: return "RZ(-pi)";
  }
  return "?";
}

std::string_view initial_token(InitialOut o) {
  switch (o) {
    case InitialOut::Zero: return "0";
    case InitialOut::One: return "1";
    case InitialOut::Either: return "0|1";
  }
  return "?";
}

}  // namespace

std::string_view operator_name(OperatorKind kind) {
  for (const auto &[k, name] : kOperatorNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<OperatorKind> operator_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (const auto &[k, n] : kOperatorNames) {
    if (n == upper) return k;
  }
  return std::nullopt;
}

std::string_view variant_name(Variant v) { return v == V::Hadamard ? "H" : "SX"; }

bool evaluate(OperatorKind kind, std::uint64_t inputs, unsigned num_inputs) {
  const std::uint64_t all = (std::uint64_t{1} << num_inputs) - 1;
  const bool in0 = inputs & 1U;
  const bool in1 = (inputs >> 1) & 1U;
  switch (kind) {
    case K::And:
    case K::Mcz: return inputs == all;
    case K::Nand: return inputs != all;
    case K::Or: return inputs != 0;
    case K::Nor: return inputs == 0;
    case K::Implication: return !in0 || in1;
    case K::Inhibition: return in0 && !in1;
  }
  return false;
}

std::span<const OperatorSpec> standard_specs() { return kStandardSpecs; }

const OperatorSpec &standard_spec(OperatorKind kind, Variant variant) {
  for (const auto &s : kStandardSpecs) {
    if (s.kind == kind && s.variant == variant) return s;
  }
  throw UnsupportedOperatorError("no standard specification row");
}

std::vector<OperatorSpec> parse_spec_table(std::string_view text, const std::string &source) {
  std::vector<OperatorSpec> rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string &what) { return ParseError(source, line_no, what); };
    if (tok.size() != 12) throw fail("expected 12 columns, got " + std::to_string(tok.size()));
    OperatorSpec spec;
    const auto kind = operator_from_name(tok[0]);
    if (!kind) throw fail("unknown operator '" + tok[0] + "'");
    spec.kind = *kind;
    if (tok[1] == "H") {
      spec.variant = V::Hadamard;
    } else if (tok[1] == "SX") {
      spec.variant = V::SqrtX;
    } else {
      throw fail("variant must be H or SX");
    }
    for (int i = 0; i < 4; ++i) {
      const auto &s = tok[2 + i];
      if (s != "+" && s != "-") throw fail("sign must be '+' or '-'");
      spec.signs[i] = s == "+" ? 1 : -1;
    }
    auto parse_sp = [&](const std::string &t) {
      for (S g : {S::H, S::SqrtX, S::SqrtXDagger}) {
        if (sp_token(g) == t) return g;
      }
      throw fail("unknown superposition gate '" + t + "'");
    };
    auto parse_ax = [&](const std::string &t) {
      for (A g : {A::I, A::RzPlusPi, A::RzMinusPi}) {
        if (ax_token(g) == t) return g;
      }
      throw fail("unknown auxiliary gate '" + t + "'");
    };
    spec.sp1 = parse_sp(tok[6]);
    spec.ax1 = parse_ax(tok[7]);
    spec.ax2 = parse_ax(tok[8]);
    spec.sp2 = parse_sp(tok[9]);
    if (spec.ax1 != A::I) throw fail("only AX1 = I is supported");
    if (tok[10] == "0") {
      spec.initial_out = InitialOut::Zero;
    } else if (tok[10] == "1") {
      spec.initial_out = InitialOut::One;
    } else if (tok[10] == "0|1") {
      spec.initial_out = InitialOut::Either;
    } else {
      throw fail("initial_out must be 0, 1 or 0|1");
    }
    if (tok[11] == "pass") {
      spec.expected_pass = true;
    } else if (tok[11] == "fail") {
      spec.expected_pass = false;
    } else {
      throw fail("expected column must be pass or fail");
    }
    rows.push_back(spec);
  }
  return rows;
}

std::vector<OperatorSpec> load_spec_table(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open spec table '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_table(buf.str(), path);
}

void write_spec_table(std::ostream &os, std::span<const OperatorSpec> specs) {
  os << "# kind variant s1 s2 s3 s4 sp1 ax1 ax2 sp2 initial_out expected\n";
  for (const auto &s : specs) {
    os << operator_name(s.kind) << ' ' << variant_name(s.variant);
    for (int sign : s.signs) os << ' ' << (sign > 0 ? '+' : '-');
    os << ' ' << sp_token(s.sp1) << ' ' << ax_token(s.ax1) << ' ' << ax_token(s.ax2) << ' '
       << sp_token(s.sp2) << ' ' << initial_token(s.initial_out) << ' '
       << (s.expected_pass ? "pass" : "fail") << '\n';
  }
}

Angle core_magnitude(OperatorKind kind, unsigned n) {
  if (n < 3) throw UnsupportedOperatorError("operators need n >= 3");
  const unsigned shift = kind == K::Mcz ? n - 2 : n - 1;
  return Angle(1, std::int64_t{1} << shift);
}

Circuit build_core(unsigned n, const Angle &magnitude, const std::array<int, 4> &signs,
                   std::span<const Qubit> inputs, Qubit out, std::optional<unsigned> num_qubits) {
  if (n < 3) throw CircuitError("Core_n needs n >= 3, got " + std::to_string(n));
  if (inputs.size() != n - 1) {
    throw CircuitError("Core_" + std::to_string(n) + " needs " + std::to_string(n - 1) +
                       " inputs, got " + std::to_string(inputs.size()));
  }
  require_distinct(inputs, {out});
  Circuit c(width_for(inputs, {out}, num_qubits));
  c.reserve((std::size_t{1} << n) - 1);
  for_each_core_gate(n, magnitude, signs, inputs, out, [&c](const Gate &g) { c.add(g); });
  return c;
}

OperatorRequest OperatorRequest::canonical(const OperatorSpec &spec, unsigned n) {
  OperatorRequest r;
  r.spec = spec;
  r.n = n;
  for (Qubit q = 0; q + 1 < n; ++q) r.inputs.push_back(q);
  r.out = n - 1;
  return r;
}

Circuit build_operator(const OperatorRequest &req) {
  const auto &spec = req.spec;
  if (req.n < 3) throw UnsupportedOperatorError("operators need n >= 3");
  if ((spec.kind == K::Implication || spec.kind == K::Inhibition) && req.n != 3) {
    throw UnsupportedOperatorError(std::string(operator_name(spec.kind)) +
                                   " is only defined for n = 3");
  }
  if (req.inputs.size() + 1 != req.n) {
    throw CircuitError("operator of n = " + std::to_string(req.n) + " needs " +
                       std::to_string(req.n - 1) + " inputs");
  }
  require_distinct(req.inputs, {req.out});
  Circuit c(width_for(req.inputs, {req.out}, req.num_qubits));
  emit_superposition(c, spec.sp1, req.out);
  emit_aux(c, spec.ax1, req.out);
  c.append(build_core(req.n, core_magnitude(spec.kind, req.n), spec.signs, req.inputs, req.out,
                      c.num_qubits()));
  emit_aux(c, spec.ax2, req.out);
  emit_superposition(c, spec.sp2, req.out);
  label_roles(c, req.inputs, req.out);
  return c;
}

namespace {

Circuit controlled_root(unsigned n, std::span<const Qubit> inputs, Qubit out,
                        std::optional<unsigned> num_qubits, bool dagger) {
  if (n < 2) throw UnsupportedOperatorError("controlled-V needs n >= 2");
  if (inputs.size() + 1 != n) {
    throw CircuitError("controlled-V of n = " + std::to_string(n) + " needs " +
                       std::to_string(n - 1) + " controls");
  }
  require_distinct(inputs, {out});
  Circuit c(width_for(inputs, {out}, num_qubits));
  c.add_single(GateKind::H, out);
  if (n == 2) {
    const Angle quarter(dagger ? 1 : -1, 4);
    c.add_rz(quarter, out);
    c.add_cnot(inputs[0], out);
    c.add_rz(-quarter, out);
  } else {
    // AND pattern for V, mirrored pattern for V†; half the AND magnitude
    // turns the all-ones Z into a quarter turn.
    const std::array<int, 4> signs =
        dagger ? std::array<int, 4>{+1, -1, +1, -1} : std::array<int, 4>{-1, +1, -1, +1};
    c.append(build_core(n, core_magnitude(K::And, n).halved(), signs, inputs, out,
                        c.num_qubits()));
  }
  c.add_single(GateKind::H, out);
  label_roles(c, inputs, out);
  return c;
}

}  // namespace

Circuit compose_controlled_v(unsigned n, std::span<const Qubit> inputs, Qubit out,
                             std::optional<unsigned> num_qubits) {
  return controlled_root(n, inputs, out, num_qubits, false);
}

Circuit compose_controlled_v_dagger(unsigned n, std::span<const Qubit> inputs, Qubit out,
                                    std::optional<unsigned> num_qubits) {
  return controlled_root(n, inputs, out, num_qubits, true);
}

Circuit compose_fredkin(unsigned n, std::span<const Qubit> controls, Qubit out0, Qubit out1,
                        std::optional<unsigned> num_qubits) {
  if (n < 3) throw UnsupportedOperatorError("Fredkin needs n >= 3");
  if (controls.size() + 2 != n) {
    throw CircuitError("Fredkin of n = " + std::to_string(n) + " needs " +
                       std::to_string(n - 2) + " controls");
  }
  require_distinct(controls, {out0, out1});
  OperatorRequest req;
  req.spec = standard_spec(K::And);
  req.n = n;
  req.inputs.assign(controls.begin(), controls.end());
  req.inputs.push_back(out0);
  req.out = out1;
  req.num_qubits = width_for(controls, {out0, out1}, num_qubits);
  const Circuit toffoli = build_operator(req);

  Circuit c(*req.num_qubits);
  c.add_cnot(out1, out0);
  c.append(toffoli);
  c.add_cnot(out1, out0);
  for (std::size_t i = 0; i < controls.size(); ++i) {
    c.set_label(controls[i], "in" + std::to_string(i));
  }
  c.set_label(out0, "out0");
  c.set_label(out1, "out1");
  return c;
}

Circuit compose_miller(unsigned n, std::span<const Qubit> inputs, Qubit out,
                       std::optional<unsigned> num_qubits) {
  if (n < 3) throw UnsupportedOperatorError("Miller needs n >= 3");
  OperatorRequest req;
  req.spec = standard_spec(K::And);
  req.n = n;
  req.inputs.assign(inputs.begin(), inputs.end());
  req.out = out;
  req.num_qubits = num_qubits;
  const Circuit toffoli = build_operator(req);

  Circuit c(toffoli.num_qubits());
  for (Qubit q : inputs) c.add_cnot(out, q);
  c.append(toffoli);
  for (Qubit q : inputs) c.add_cnot(out, q);
  label_roles(c, inputs, out);
  return c;
}

OperatorCheck check_operator(const OperatorSpec &spec, unsigned n, double tol) {
  const Circuit c = build_operator(OperatorRequest::canonical(spec, n));
  const Qubit out = n - 1;
  const unsigned num_inputs = n - 1;
  OperatorCheck result;
  const std::uint64_t rows = std::uint64_t{1} << num_inputs;

  auto record = [&](bool ok, double p) {
    ++result.rows_checked;
    result.min_probability = std::min(result.min_probability, p);
    if (!ok) ++result.failing_rows;
  };

  if (spec.kind == K::Mcz) {
    for (int initial : {0, 1}) {
      for (std::uint64_t bits = 0; bits < rows; ++bits) {
        const std::uint64_t basis = bits | (std::uint64_t(initial) << out);
        const StateVector s = simulate(c, basis);
        const double p = s.probability(basis);
        record(p >= 1.0 - tol, p);
      }
    }
  } else {
    const int initial = spec.initial_out == InitialOut::One ? 1 : 0;
    for (std::uint64_t bits = 0; bits < rows; ++bits) {
      const std::uint64_t basis = bits | (std::uint64_t(initial) << out);
      const StateVector s = simulate(c, basis);
      const int want = evaluate(spec.kind, bits, num_inputs) ? 1 : 0;
      const double p = want ? s.probability_one(out) : 1.0 - s.probability_one(out);
      record(p >= 1.0 - tol, p);
    }
  }
  result.pass = result.failing_rows == 0;
  return result;
}

}  // namespace lasynth
