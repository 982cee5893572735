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

#include "lasynth/circuit_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lasynth/errors.hpp"

namespace lasynth {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view s, std::string_view marker) {
  const auto p = s.find(marker);
  return p == std::string_view::npos ? s : s.substr(0, p);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T &out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size() && !s.empty();
}

std::string qasm_angle(const Angle &a) {
  if (a.num() == 0) return "0";
  std::string out = a.num() < 0 ? "-" : "";
  const auto mag = a.num() < 0 ? -std::int64_t{a.num()} : std::int64_t{a.num()};
  if (mag != 1) out += std::to_string(mag) + "*";
  out += "pi";
  if (a.den() != 1) out += "/" + std::to_string(a.den());
  return out;
}

std::optional<Angle> parse_qasm_angle(std::string_view s) {
  s = trim(s);
  if (s == "0") return Angle{};
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::int64_t num = 1;
  std::int64_t den = 1;
  const auto star = s.find('*');
  if (star != std::string_view::npos) {
    if (!parse_number(s.substr(0, star), num)) return std::nullopt;
    s.remove_prefix(star + 1);
  }
  if (s.substr(0, 2) != "pi") return std::nullopt;
  s.remove_prefix(2);
  if (!s.empty()) {
    if (s.front() != '/' || !parse_number(s.substr(1), den) || den == 0) {
      return std::nullopt;
    }
  }
  return Angle(negative ? -num : num, den);
}

}  // namespace

void write_circuit_text(std::ostream &os, const Circuit &c) {
  os << "qubits " << c.num_qubits() << '\n';
  for (const auto &[q, role] : c.labels()) os << "label " << q << ' ' << role << '\n';
  for (const Gate &g : c.gates()) {
    os << kind_name(g.kind()) << ' ' << g.qubit(0);
    if (g.arity() == 2) os << ',' << g.qubit(1);
    if (g.kind() == GateKind::RZ) os << " angle=" << g.angle().str();
    os << '\n';
  }
}

std::string to_circuit_text(const Circuit &c) {
  std::ostringstream os;
  write_circuit_text(os, c);
  return os.str();
}

Circuit read_circuit_text(std::istream &is, const std::string &source) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_circuit_text(buf.str(), source);
}

Circuit parse_circuit_text(std::string_view text, const std::string &source) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(strip_comment(raw, "#"));
    if (line.empty()) continue;
    const auto tok = split_ws(line);
    auto fail = [&](const std::string &what) -> ParseError {
      return ParseError(source, line_no, what);
    };
    if (!circuit) {
      unsigned n = 0;
      if (tok.size() != 2 || tok[0] != "qubits" || !parse_number(tok[1], n)) {
        throw fail("expected 'qubits <N>' header");
      }
      circuit.emplace(n);
      continue;
    }
    try {
      if (tok[0] == "label") {
        Qubit q = 0;
        if (tok.size() != 3 || !parse_number(tok[1], q)) {
          throw fail("expected 'label <qubit> <role>'");
        }
        circuit->set_label(q, std::string(tok[2]));
        continue;
      }
      const auto kind = kind_from_name(tok[0]);
      if (!kind) throw fail("unknown gate kind '" + std::string(tok[0]) + "'");
      if (tok.size() < 2) throw fail("missing qubit operands");
      std::vector<Qubit> qs;
      std::string_view ops = tok[1];
      while (!ops.empty()) {
        const auto comma = ops.find(',');
        Qubit q = 0;
        if (!parse_number(ops.substr(0, comma), q)) throw fail("bad qubit index");
        qs.push_back(q);
        ops = comma == std::string_view::npos ? std::string_view{} : ops.substr(comma + 1);
      }
      if (qs.size() != arity(*kind)) throw fail("wrong operand count");
      if (*kind == GateKind::RZ) {
        if (tok.size() != 3 || tok[2].substr(0, 6) != "angle=") {
          throw fail("RZ needs angle=<num>/<den>pi");
        }
        const auto angle = Angle::parse(tok[2].substr(6));
        if (!angle) throw fail("bad angle '" + std::string(tok[2]) + "'");
        circuit->add_rz(*angle, qs[0]);
      } else {
        if (tok.size() != 2) throw fail("unexpected trailing tokens");
        if (qs.size() == 1) {
          circuit->add_single(*kind, qs[0]);
        } else {
          circuit->add_two(*kind, qs[0], qs[1]);
        }
      }
    } catch (const CircuitError &e) {
      throw fail(e.what());
    }
  }
  if (!circuit) throw ParseError(source, line_no, "empty circuit file");
  return std::move(*circuit);
}

void write_qasm(std::ostream &os, const Circuit &c) {
  bool has_ecr = false;
  bool has_cvdg = false;
  for (const Gate &g : c.gates()) {
    has_ecr |= g.kind() == GateKind::ECR;
    has_cvdg |= g.kind() == GateKind::MacroVDagger;
  }
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (has_ecr) {
    os << "gate rzx(param0) q0,q1 { h q1; cx q0,q1; rz(param0) q1; cx q0,q1; h q1; }\n"
          "gate ecr q0,q1 { rzx(pi/4) q0,q1; x q0; rzx(-pi/4) q0,q1; }\n";
  }
  if (has_cvdg) {
    os << "gate csxdg q0,q1 { h q1; cu1(-pi/2) q0,q1; h q1; }\n";
  }
  os << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate &g : c.gates()) {
    switch (g.kind()) {
      case GateKind::I: os << "id"; break;
      case GateKind::X: os << "x"; break;
      case GateKind::SqrtX: os << "sx"; break;
      case GateKind::SqrtXDagger: os << "sxdg"; break;
      case GateKind::RZ: os << "rz(" << qasm_angle(g.angle()) << ")"; break;
      case GateKind::H: os << "h"; break;
      case GateKind::CNOT: os << "cx"; break;
      case GateKind::SWAP: os << "swap"; break;
      case GateKind::ECR: os << "ecr"; break;
      case GateKind::MacroV: os << "csx"; break;
      case GateKind::MacroVDagger: os << "csxdg"; break;
    }
    os << " q[" << g.qubit(0) << "]";
    if (g.arity() == 2) os << ",q[" << g.qubit(1) << "]";
    os << ";\n";
  }
}

std::string to_qasm(const Circuit &c) {
  std::ostringstream os;
  write_qasm(os, c);
  return os.str();
}

Circuit parse_qasm(std::string_view text, const std::string &source) {
  static const std::vector<std::pair<std::string_view, GateKind>> kNames = {
      {"id", GateKind::I},     {"x", GateKind::X},          {"sx", GateKind::SqrtX},
      {"sxdg", GateKind::SqrtXDagger}, {"rz", GateKind::RZ}, {"h", GateKind::H},
      {"cx", GateKind::CNOT},  {"swap", GateKind::SWAP},    {"ecr", GateKind::ECR},
      {"csx", GateKind::MacroV}, {"csxdg", GateKind::MacroVDagger},
  };
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(strip_comment(raw, "//"));
    if (line.empty() || line.starts_with("OPENQASM") || line.starts_with("include") ||
        line.starts_with("gate ")) {
      continue;
    }
    auto fail = [&](const std::string &what) -> ParseError {
      return ParseError(source, line_no, what);
    };
    if (line.back() != ';') throw fail("statement must end with ';'");
    line.remove_suffix(1);
    if (line.starts_with("qreg")) {
      const auto lb = line.find('[');
      const auto rb = line.find(']');
      unsigned n = 0;
      if (circuit || lb == std::string_view::npos || rb == std::string_view::npos ||
          trim(line.substr(4, lb - 4)) != "q" ||
          !parse_number(line.substr(lb + 1, rb - lb - 1), n)) {
        throw fail("expected a single 'qreg q[N];'");
      }
      circuit.emplace(n);
      continue;
    }
    if (!circuit) throw fail("gate before qreg declaration");
    const auto name_end = line.find_first_of(" (");
    const auto name = line.substr(0, name_end);
    std::optional<GateKind> kind;
    for (const auto &[n, k] : kNames) {
      if (n == name) kind = k;
    }
    if (!kind) throw fail("unsupported gate '" + std::string(name) + "'");
    std::optional<Angle> angle;
    std::string_view rest = line.substr(name.size());
    if (*kind == GateKind::RZ) {
      const auto rp = rest.find(')');
      if (rest.empty() || rest.front() != '(' || rp == std::string_view::npos) {
        throw fail("rz needs a parameter");
      }
      angle = parse_qasm_angle(rest.substr(1, rp - 1));
      if (!angle) throw fail("unsupported angle expression");
      rest.remove_prefix(rp + 1);
    }
    std::vector<Qubit> qs;
    rest = trim(rest);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      auto operand = trim(rest.substr(0, comma));
      Qubit q = 0;
      if (!operand.starts_with("q[") || operand.back() != ']' ||
          !parse_number(operand.substr(2, operand.size() - 3), q)) {
        throw fail("bad operand '" + std::string(operand) + "'");
      }
      qs.push_back(q);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (qs.size() != arity(*kind)) throw fail("wrong operand count");
    try {
      if (angle) {
        circuit->add_rz(*angle, qs[0]);
      } else if (qs.size() == 1) {
        circuit->add_single(*kind, qs[0]);
      } else {
        circuit->add_two(*kind, qs[0], qs[1]);
      }
    } catch (const CircuitError &e) {
      throw fail(e.what());
    }
  }
  if (!circuit) throw ParseError(source, line_no, "no qreg declaration");
  return std::move(*circuit);
}

}  // namespace lasynth
