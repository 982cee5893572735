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

#include "lasynth/tqc.hpp"

#include <sstream>

#include "lasynth/errors.hpp"
#include "lasynth/router.hpp"

namespace lasynth {

std::size_t tqc(std::size_t n1, std::size_t n2, std::size_t xc, std::size_t d) {
  return n1 + n2 + xc + d;
}

void TqcReport::check() const {
  if (total != tqc(n1, n2, xc, d)) {
    throw LasynthError("report '" + identity + "' has TQC " + std::to_string(total) +
                       " but its components sum to " + std::to_string(tqc(n1, n2, xc, d)));
  }
}

namespace {

TqcReport report_from_lowered(const Circuit &lowered, std::size_t xc, Basis basis,
                              std::string identity) {
  const GateCounts counts = gate_counts(lowered);
  TqcReport r;
  r.n1 = counts.n1;
  r.n2 = counts.n2;
  r.xc = xc;
  r.d = depth(lowered);
  r.total = tqc(r.n1, r.n2, r.xc, r.d);
  r.swap_two_qubit = 3 * xc;
  r.basis = basis;
  r.identity = std::move(identity);
  r.check();
  return r;
}

void fill_construct_fields(TqcReport &r, Construct c, unsigned n, Style style) {
  r.n = n;
  r.straight = style == Style::Straight;
  r.experimental = c == Construct::Mcz;
  r.construct = c;
  if (r.straight) r.core = core_stats(c, n);
}

Circuit build(Construct c, unsigned n, Style style, Variant variant) {
  return style == Style::Straight ? build_straight(c, n, variant) : build_conventional(c, n);
}

}  // namespace

TqcReport analyze(const Circuit &c, const CouplingMap &map, const Placement &p, Basis basis,
                  std::string identity) {
  const RoutingResult routed = route(c, map, p);
  TqcReport r = report_from_lowered(lower_to_native(routed.routed, basis), routed.xc, basis,
                                    std::move(identity));
  r.placement = p.summary();
  return r;
}

TqcReport analyze_structural(const Circuit &c, Basis basis, std::string identity) {
  return report_from_lowered(lower_to_native(c, basis), 0, basis, std::move(identity));
}

std::string construct_identity(Construct c, unsigned n, Style style, Variant variant) {
  std::ostringstream os;
  os << (style == Style::Straight ? "straight" : "conventional") << ' ' << construct_name(c)
     << " n=" << n;
  if (style == Style::Straight && as_operator(c)) os << " variant=" << variant_name(variant);
  return os.str();
}

TqcReport analyze_construct(Construct c, unsigned n, Style style, const CouplingMap &map,
                            const Placement &p, Basis basis, Variant variant) {
  TqcReport r = analyze(build(c, n, style, variant), map, p, basis,
                        construct_identity(c, n, style, variant));
  fill_construct_fields(r, c, n, style);
  return r;
}

TqcReport analyze_construct_structural(Construct c, unsigned n, Style style, Basis basis,
                                       Variant variant) {
  TqcReport r = analyze_structural(build(c, n, style, variant), basis,
                                   construct_identity(c, n, style, variant));
  fill_construct_fields(r, c, n, style);
  return r;
}

std::vector<ComparisonRow> compare(std::span<const Construct> constructs, unsigned n,
                                   const CouplingMap &map, const ComparisonOptions &options) {
  std::vector<ComparisonRow> rows;
  for (Construct c : constructs) {
    if (!supported(c, n)) continue;
    const Placement star = place_operator(map, n, options.preferred_target);
    const Placement baseline = options.conventional_placement == ConventionalPlacement::Random
                                   ? random_connected_placement(map, n, options.seed)
                                   : star;
    ComparisonRow row;
    row.construct = c;
    row.n = n;
    row.straight = analyze_construct(c, n, Style::Straight, map, star, options.basis);
    row.conventional = analyze_construct(c, n, Style::Conventional, map, baseline, options.basis);
    row.ratio = static_cast<double>(row.conventional.total) /
                static_cast<double>(row.straight.total);
    row.straight_cheaper = row.straight.total < row.conventional.total;
    rows.push_back(std::move(row));
  }
  return rows;
}

TqcPrediction predict_tqc(const TqcReport &previous, const CouplingMap *map) {
  if (!previous.straight) {
    throw LasynthError("predictions need a straight-construction report, got '" +
                       previous.identity + "'");
  }
  if (!previous.core) {
    throw LasynthError("report '" + previous.identity + "' carries no core statistics");
  }
  const CoreStats &p = *previous.core;
  TqcPrediction out;
  out.n = previous.n + 1;
  out.core = {2 * p.rz, 2 * p.cnot + 1, 2 * p.depth + 1};
  const bool ecr = previous.basis == Basis::ECR;
  const std::size_t singles_per_cnot = ecr ? 3 : 0;
  const std::size_t core_layers_per_cnot = ecr ? 2 : 1;
  const std::size_t fanout_layers_per_cnot = ecr ? 3 : 1;
  const auto native = [&](const CoreStats &k) {
    return CoreStats{k.rz + singles_per_cnot * k.cnot, k.cnot,
                     k.rz + core_layers_per_cnot * k.cnot};
  };
  const CoreStats before = native(p);
  const CoreStats after = native(out.core);
  out.n1 = after.rz + (previous.n1 - before.rz);
  out.n2 = after.cnot + (previous.n2 - before.cnot);
  out.d = after.depth + (previous.d - before.depth);
  if (previous.construct == Construct::Miller) {
    out.n1 += 2 * singles_per_cnot;
    out.n2 += 2;
    out.d += 2 * fanout_layers_per_cnot;
  }
  if (map != nullptr) {
    if (find_star_placement(*map, out.n)) out.xc = 0;
  } else if (previous.xc == 0 && previous.placement == "unplaced") {
    out.xc = 0;
  }
  out.total = tqc(out.n1, out.n2, out.xc.value_or(0), out.d);
  return out;
}

nlohmann::json to_json(const TqcReport &r) {
  nlohmann::json j;
  j["identity"] = r.identity;
  j["n"] = r.n;
  j["basis"] = std::string(basis_name(r.basis));
  j["placement"] = r.placement;
  j["N1"] = r.n1;
  j["N2"] = r.n2;
  j["XC"] = r.xc;
  j["D"] = r.d;
  j["TQC"] = r.total;
  j["swap_two_qubit_gates"] = r.swap_two_qubit;
  j["straight"] = r.straight;
  j["experimental"] = r.experimental;
  if (r.core) {
    j["core"] = {{"rz", r.core->rz}, {"cnot", r.core->cnot}, {"depth", r.core->depth}};
  }
  return j;
}

nlohmann::json to_json(const TqcPrediction &p) {
  nlohmann::json j;
  j["n"] = p.n;
  j["core"] = {{"rz", p.core.rz}, {"cnot", p.core.cnot}, {"depth", p.core.depth}};
  j["N1"] = p.n1;
  j["N2"] = p.n2;
  j["D"] = p.d;
  j["XC"] = p.xc ? nlohmann::json(*p.xc) : nlohmann::json(nullptr);
  j["TQC"] = p.total;
  return j;
}

nlohmann::json to_json(std::span<const ComparisonRow> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &row : rows) {
    arr.push_back({{"kind", std::string(construct_name(row.construct))},
                   {"n", row.n},
                   {"straight", to_json(row.straight)},
                   {"conventional", to_json(row.conventional)},
                   {"ratio", row.ratio},
                   {"straight_cheaper", row.straight_cheaper}});
  }
  return arr;
}

}  // namespace lasynth
