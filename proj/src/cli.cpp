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

#include "lasynth/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lasynth/catalog.hpp"
#include "lasynth/circuit_io.hpp"
#include "lasynth/coupling_map.hpp"
#include "lasynth/errors.hpp"
#include "lasynth/placement.hpp"
#include "lasynth/router.hpp"
#include "lasynth/statevector.hpp"
#include "lasynth/tqc.hpp"
#include "lasynth/verify.hpp"

namespace lasynth::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::array<std::string_view, 8> kSubcommands = {
    "build", "lower", "route", "simulate", "tqc", "compare", "export", "qsphere",
};

bool is_one_of(const std::string &value, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (value == a) return true;
  }
  return false;
}

bool explicit_placement(const CommandConfig &c) {
  return c.placement && !is_one_of(*c.placement, {"star", "best", "random"});
}

Basis parse_basis(const std::string &s) { return s == "ecr" ? Basis::ECR : Basis::CNOT; }

Construct parse_construct(const std::string &name) {
  const auto c = construct_from_name(name);
  if (!c) throw UnsupportedOperatorError("unknown operator '" + name + "'");
  return *c;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Circuit load_input(const std::string &path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 8, "OPENQASM") == 0) {
    return parse_qasm(text, path);
  }
  return parse_circuit_text(text, path);
}

Circuit resolve_circuit(const CommandConfig &c) {
  if (c.input) return load_input(*c.input);
  const Construct kind = parse_construct(*c.op);
  if (c.conventional) return build_conventional(kind, *c.n);
  return build_straight(kind, *c.n, c.variant == "sx" ? Variant::SqrtX : Variant::Hadamard);
}

unsigned parse_size_suffix(const std::string &name, std::size_t prefix) {
  unsigned n = 0;
  try {
    n = static_cast<unsigned>(std::stoul(name.substr(prefix)));
  } catch (const std::exception &) {
    throw UsageError("bad map size in '" + name + "'");
  }
  return n;
}

CouplingMap resolve_map(const CommandConfig &c) {
  const std::string name = c.map.value_or("heavyhex127");
  if (name == "heavyhex127") return heavy_hex_127();
  if (name.rfind("path:", 0) == 0) return path_map(parse_size_suffix(name, 5));
  if (name.rfind("ring:", 0) == 0) return ring_map(parse_size_suffix(name, 5));
  namespace fs = std::filesystem;
  if (fs::exists(name)) return load_coupling_map(name);
  if (const char *dir = std::getenv("LASYNTH_MAP_DIR")) {
    for (const std::string &candidate : {name, name + ".map"}) {
      const fs::path p = fs::path(dir) / candidate;
      if (fs::exists(p)) return load_coupling_map(p.string());
    }
  }
  throw IoError("coupling map '" + name + "' not found");
}

Placement resolve_placement(const CommandConfig &c, const CouplingMap &map, unsigned width) {
  const std::string mode = c.placement.value_or("star");
  if (mode == "star") return place_operator(map, width, c.target);
  if (mode == "best") return best_placement(map, width);
  if (mode == "random") return random_connected_placement(map, width, c.seed);
  std::vector<Qubit> l2p;
  std::istringstream in(mode);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      l2p.push_back(static_cast<Qubit>(std::stoul(tok)));
    } catch (const std::exception &) {
      throw UsageError("bad --placement entry '" + tok + "'");
    }
  }
  return classify(map, std::move(l2p));
}

std::uint64_t parse_init(const std::string &s, unsigned num_qubits) {
  const bool bits = s.size() == num_qubits && s.find_first_not_of("01") == std::string::npos;
  std::uint64_t value = 0;
  if (bits) {
    for (char ch : s) value = (value << 1) | static_cast<std::uint64_t>(ch == '1');
    return value;
  }
  try {
    std::size_t used = 0;
    value = std::stoull(s, &used);
    if (used != s.size()) throw UsageError("");
  } catch (const std::exception &) {
    throw UsageError("--init must be a " + std::to_string(num_qubits) +
                     "-character bit string or a basis index, got '" + s + "'");
  }
  if (num_qubits < 64 && value >= (std::uint64_t{1} << num_qubits)) {
    throw UsageError("--init " + s + " is outside a " + std::to_string(num_qubits) +
                     "-qubit register");
  }
  return value;
}

void write_circuit(std::ostream &os, const Circuit &c, const std::string &format) {
  if (format == "qasm") {
    write_qasm(os, c);
  } else {
    write_circuit_text(os, c);
  }
}

void print_report(std::ostream &os, const TqcReport &r) {
  os << r.identity << '\n'
     << "  basis      " << basis_name(r.basis) << '\n'
     << "  placement  " << r.placement << '\n'
     << "  N1 " << r.n1 << "  N2 " << r.n2 << "  XC " << r.xc << "  D " << r.d << "  TQC "
     << r.total << '\n';
  if (r.experimental) os << "  (experimental)\n";
}

int cmd_route(const CommandConfig &c, std::ostream &out) {
  const Circuit circuit = resolve_circuit(c);
  const CouplingMap map = resolve_map(c);
  const Placement p = resolve_placement(c, map, circuit.num_qubits());
  const RoutingResult r = route(circuit, map, p);
  if (c.pretty) {
    out << "placement " << p.summary() << "\nXC " << r.xc << '\n';
    write_circuit(out, compact(r.routed).circuit, c.format);
    return kOk;
  }
  nlohmann::json j;
  j["placement"] = p.summary();
  j["XC"] = r.xc;
  j["initial_layout"] = r.initial_layout;
  j["final_layout"] = r.final_layout;
  std::ostringstream text;
  write_circuit(text, r.routed, c.format);
  j["circuit"] = text.str();
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_simulate(const CommandConfig &c, std::ostream &out) {
  const Circuit circuit = resolve_circuit(c);
  const std::uint64_t init = c.init ? parse_init(*c.init, circuit.num_qubits()) : 0;
  const StateVector s = simulate(circuit, init);
  if (c.pretty) {
    out << "label\tprobability\tre\tim\n" << std::setprecision(12);
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      if (std::norm(s[i]) <= 1e-12) continue;
      out << basis_label(i, s.num_qubits()) << '\t' << std::norm(s[i]) << '\t' << s[i].real()
          << '\t' << s[i].imag() << '\n';
    }
    return kOk;
  }
  nlohmann::json amps = nlohmann::json::array();
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (std::norm(s[i]) <= 1e-12) continue;
    amps.push_back({{"label", basis_label(i, s.num_qubits())},
                    {"probability", std::norm(s[i])},
                    {"re", s[i].real()},
                    {"im", s[i].imag()}});
  }
  out << nlohmann::json{{"num_qubits", s.num_qubits()},
                        {"init", basis_label(init, s.num_qubits())},
                        {"amplitudes", amps}}
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_tqc(const CommandConfig &c, std::ostream &out) {
  const CouplingMap map = resolve_map(c);
  const Basis basis = parse_basis(c.basis);
  TqcReport r;
  if (c.input) {
    const Circuit circuit = load_input(*c.input);
    r = analyze(circuit, map, resolve_placement(c, map, circuit.num_qubits()), basis, *c.input);
  } else {
    const Construct kind = parse_construct(*c.op);
    const Style style = c.conventional ? Style::Conventional : Style::Straight;
    const Variant variant = c.variant == "sx" ? Variant::SqrtX : Variant::Hadamard;
    r = analyze_construct(kind, *c.n, style, map, resolve_placement(c, map, *c.n), basis,
                          variant);
  }
  if (c.pretty) {
    print_report(out, r);
  } else {
    out << to_json(r).dump(2) << '\n';
  }
  return kOk;
}

int cmd_compare(const CommandConfig &c, std::ostream &out) {
  const CouplingMap map = resolve_map(c);
  std::vector<Construct> kinds;
  for (const auto &name : c.ops) kinds.push_back(parse_construct(name));
  if (c.ops.empty()) {
    const auto all = comparison_constructs();
    kinds.assign(all.begin(), all.end());
  }
  ComparisonOptions options;
  options.basis = parse_basis(c.basis);
  options.preferred_target = c.target;
  options.seed = c.seed;
  if (c.placement == "random") options.conventional_placement = ConventionalPlacement::Random;
  const auto rows = compare(kinds, *c.n, map, options);
  if (!c.pretty) {
    out << to_json(rows).dump(2) << '\n';
    return kOk;
  }
  out << std::left << std::setw(12) << "kind" << std::right;
  for (const char *h : {"N1", "N2", "XC", "D", "TQC"}) out << std::setw(7) << h;
  out << "  |";
  for (const char *h : {"N1", "N2", "XC", "D", "TQC"}) out << std::setw(7) << h;
  out << std::setw(8) << "ratio" << '\n';
  for (const auto &row : rows) {
    out << std::left << std::setw(12) << construct_name(row.construct) << std::right;
    for (const TqcReport *r : {&row.conventional, &row.straight}) {
      out << std::setw(7) << r->n1 << std::setw(7) << r->n2 << std::setw(7) << r->xc
          << std::setw(7) << r->d << std::setw(7) << r->total;
      if (r == &row.conventional) out << "  |";
    }
    out << std::setw(8) << std::fixed << std::setprecision(2) << row.ratio << '\n';
  }
  out << "left: conventional, right: straight; n = " << *c.n << ", basis "
      << basis_name(options.basis) << '\n';
  return kOk;
}

int cmd_qsphere(const CommandConfig &c, std::ostream &out) {
  const Circuit circuit = resolve_circuit(c);
  const auto flags = out.flags();
  if (c.init) {
    write_qsphere_table(out, qsphere_data(simulate(circuit, parse_init(*c.init, circuit.num_qubits()))));
    return kOk;
  }
  out << "input\tlabel\tprobability\tphase\n" << std::setprecision(12);
  const std::uint64_t dim = std::uint64_t{1} << circuit.num_qubits();
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (const auto &e : qsphere_data(simulate(circuit, x))) {
      out << basis_label(x, circuit.num_qubits()) << '\t' << e.label << '\t' << e.probability
          << '\t' << e.phase << '\n';
    }
  }
  out.flags(flags);
  return kOk;
}

int dispatch(const CommandConfig &c, std::ostream &out) {
  const std::string &cmd = c.subcommand;
  if (cmd == "build") {
    write_circuit(out, resolve_circuit(c), c.format);
  } else if (cmd == "lower") {
    write_circuit(out, lower_to_native(resolve_circuit(c), parse_basis(c.basis)), c.format);
  } else if (cmd == "export") {
    write_qasm(out, resolve_circuit(c));
  } else if (cmd == "route") {
    return cmd_route(c, out);
  } else if (cmd == "simulate") {
    return cmd_simulate(c, out);
  } else if (cmd == "tqc") {
    return cmd_tqc(c, out);
  } else if (cmd == "compare") {
    return cmd_compare(c, out);
  } else if (cmd == "qsphere") {
    return cmd_qsphere(c, out);
  }
  return kOk;
}

}  // namespace

void validate(const CommandConfig &c) {
  const std::string &cmd = c.subcommand;
  if (std::find(kSubcommands.begin(), kSubcommands.end(), cmd) == kSubcommands.end()) {
    throw UsageError("unknown subcommand '" + cmd + "'");
  }
  if (!is_one_of(c.variant, {"h", "sx"})) throw UsageError("--variant must be h or sx");
  if (!is_one_of(c.basis, {"cnot", "ecr"})) throw UsageError("--basis must be cnot or ecr");
  if (!is_one_of(c.format, {"text", "qasm"})) throw UsageError("--format must be text or qasm");
  if (c.op && c.input) throw UsageError("--op and --input are mutually exclusive");
  if (c.conventional && c.variant == "sx") {
    throw UsageError("--variant sx applies to the straight construction, not --conventional");
  }
  if (c.target && (explicit_placement(c) || c.placement == "best" || c.placement == "random") &&
      cmd != "compare") {
    throw UsageError("--target only applies to the star placement, not --placement " +
                     *c.placement);
  }
  if (c.init && !is_one_of(cmd, {"simulate", "qsphere"})) {
    throw UsageError("--init only applies to simulate and qsphere");
  }
  if (!c.ops.empty() && cmd != "compare") throw UsageError("--ops only applies to compare");
  if (cmd == "compare") {
    if (c.op || c.input) throw UsageError("compare takes --ops, not --op or --input");
    if (!c.n) throw UsageError("compare needs --n");
    if (explicit_placement(c) || c.placement == "best") {
      throw UsageError("compare accepts --placement star or random only");
    }
    return;
  }
  if (!c.op && !c.input) throw UsageError(cmd + " needs --op or --input");
  if (c.op && !c.n) throw UsageError("--op needs --n");
  if (c.input && (c.n || c.conventional || c.variant != "h")) {
    throw UsageError("--n, --variant and --conventional describe a built circuit, not --input");
  }
  const bool uses_map = is_one_of(cmd, {"route", "tqc"});
  if (!uses_map && (c.map || c.placement || c.target)) {
    throw UsageError("--map, --placement and --target only apply to route, tqc and compare");
  }
}

int run(const CommandConfig &config, std::ostream &out, std::ostream &err) {
  try {
    validate(config);
    if (config.output) {
      std::ofstream file(*config.output);
      if (!file) throw IoError("cannot write '" + *config.output + "'");
      const int status = dispatch(config, file);
      file.flush();
      if (!file) throw IoError("failed writing '" + *config.output + "'");
      return status;
    }
    return dispatch(config, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError &e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const UnsupportedOperatorError &e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const LasynthError &e) {
    err << "error: " << e.what() << '\n';
    return kModule;
  }
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Layout-aware operator synthesis and transpilation cost analysis"};
  app.require_subcommand(1);
  CommandConfig config;

  auto add_common = [&config](CLI::App *sub) {
    sub->add_option("--op", config.op, "operator: and nand or nor implication inhibition mcz "
                                        "cv cvdg fredkin miller");
    sub->add_option("--n", config.n, "total qubit count of the operator")
        ->check(CLI::Range(2u, 24u));
    sub->add_option("--variant", config.variant, "superposition pair: h or sx");
    sub->add_flag("--conventional", config.conventional, "build the conventional baseline");
    sub->add_option("--input", config.input, "circuit file (text format or OpenQASM 2.0)");
    sub->add_option("-o,--output", config.output, "write the result here instead of stdout");
    sub->add_flag("--pretty", config.pretty, "human-readable output");
    sub->add_option("--format", config.format, "circuit output format: text or qasm");
    sub->add_option("--basis", config.basis, "native two-qubit gate: cnot or ecr");
    sub->add_option("--map", config.map,
                    "coupling map: heavyhex127, path:N, ring:N, a file, or a name in "
                    "$LASYNTH_MAP_DIR");
    sub->add_option("--target", config.target, "preferred physical qubit for out");
    sub->add_option("--placement", config.placement,
                    "star, best, random, or physical qubits in logical order (3,5,15,4)");
    sub->add_option("--seed", config.seed, "seed for random placements");
    sub->add_option("--init", config.init, "initial basis state (bit string or index)");
    sub->add_option("--ops", config.ops, "operators to compare (default: all nine)")
        ->delimiter(',');
  };
  const std::array<std::pair<const char *, const char *>, 8> subs = {{
      {"build", "emit a circuit file"},
      {"lower", "rewrite into the native gate set"},
      {"route", "place and route onto a coupling map"},
      {"simulate", "statevector of one basis input"},
      {"tqc", "transpilation cost report"},
      {"compare", "straight vs conventional cost table"},
      {"export", "OpenQASM 2.0 export"},
      {"qsphere", "per-basis-state probabilities and phases"},
  }};
  for (const auto &[name, help] : subs) {
    CLI::App *sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&config, name = std::string(name)] { config.subcommand = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return run(config, out, err);
}

}  // namespace lasynth::cli
