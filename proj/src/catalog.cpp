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

#include "lasynth/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "lasynth/conventional.hpp"
#include "lasynth/errors.hpp"

namespace lasynth {

namespace {

constexpr std::array<std::pair<Construct, std::string_view>, 11> kNames = {{
    {Construct::And, "AND"},
    {Construct::Nand, "NAND"},
    {Construct::Or, "OR"},
    {Construct::Nor, "NOR"},
    {Construct::Implication, "IMPLICATION"},
    {Construct::Inhibition, "INHIBITION"},
    {Construct::Mcz, "MCZ"},
    {Construct::ControlledV, "CV"},
    {Construct::ControlledVDagger, "CVDG"},
    {Construct::Fredkin, "FREDKIN"},
    {Construct::Miller, "MILLER"},
}};

constexpr std::array<Construct, 9> kComparison = {
    Construct::And,         Construct::Nand,       Construct::Or,
    Construct::Nor,         Construct::Implication, Construct::Inhibition,
    Construct::ControlledV, Construct::Fredkin,    Construct::Miller,
};

std::vector<Qubit> low_qubits(unsigned count) {
  std::vector<Qubit> q(count);
  for (Qubit i = 0; i < count; ++i) q[i] = i;
  return q;
}

void require_supported(Construct c, unsigned n) {
  if (!supported(c, n)) {
    throw UnsupportedOperatorError(std::string(construct_name(c)) + " is not defined for n = " +
                                   std::to_string(n));
  }
}

}  // namespace

std::string_view construct_name(Construct c) {
  for (const auto &[k, name] : kNames) {
    if (k == c) return name;
  }
  return "?";
}

std::optional<Construct> construct_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (const auto &[k, n] : kNames) {
    if (n == upper) return k;
  }
  return std::nullopt;
}

std::span<const Construct> comparison_constructs() { return kComparison; }

std::optional<OperatorKind> as_operator(Construct c) {
  switch (c) {
    case Construct::And: return OperatorKind::And;
    case Construct::Nand: return OperatorKind::Nand;
    case Construct::Or: return OperatorKind::Or;
    case Construct::Nor: return OperatorKind::Nor;
    case Construct::Implication: return OperatorKind::Implication;
    case Construct::Inhibition: return OperatorKind::Inhibition;
    case Construct::Mcz: return OperatorKind::Mcz;
    default: return std::nullopt;
  }
}

unsigned min_qubits(Construct c) {
  return c == Construct::ControlledV || c == Construct::ControlledVDagger ? 2 : 3;
}

bool supported(Construct c, unsigned n) {
  if (n < min_qubits(c)) return false;
  if ((c == Construct::Implication || c == Construct::Inhibition) && n != 3) return false;
  return true;
}

Circuit build_straight(Construct c, unsigned n, Variant variant) {
  require_supported(c, n);
  const Qubit top = n - 1;
  if (const auto kind = as_operator(c)) {
    return build_operator(OperatorRequest::canonical(standard_spec(*kind, variant), n));
  }
  const auto inputs = low_qubits(n - 1);
  switch (c) {
    case Construct::ControlledV: return compose_controlled_v(n, inputs, top);
    case Construct::ControlledVDagger: return compose_controlled_v_dagger(n, inputs, top);
    case Construct::Fredkin:
      return compose_fredkin(n, std::span(inputs).first(n - 2), n - 2, top);
    case Construct::Miller: return compose_miller(n, inputs, top);
    default: break;
  }
  throw UnsupportedOperatorError("no straight construction for " + std::string(construct_name(c)));
}

Circuit build_conventional(Construct c, unsigned n) {
  require_supported(c, n);
  const Qubit top = n - 1;
  const auto inputs = low_qubits(n - 1);
  if (const auto kind = as_operator(c)) {
    return build_conventional_operator(*kind, n, inputs, top);
  }
  const std::array<Qubit, 1> out = {top};
  switch (c) {
    case Construct::ControlledV:
      return build_conventional_special(BaselineKind::ControlledV, n, inputs, out);
    case Construct::ControlledVDagger:
      return build_conventional_special(BaselineKind::ControlledVDagger, n, inputs, out);
    case Construct::Fredkin: {
      const std::array<Qubit, 2> outs = {n - 2, top};
      return build_conventional_special(BaselineKind::Fredkin, n, std::span(inputs).first(n - 2),
                                        outs);
    }
    case Construct::Miller:
      return build_conventional_special(BaselineKind::Miller, n, inputs, out);
    default: break;
  }
  throw UnsupportedOperatorError("no conventional construction for " +
                                 std::string(construct_name(c)));
}

std::optional<CoreStats> core_stats(Construct c, unsigned n) {
  require_supported(c, n);
  if (n < 3) return std::nullopt;
  // Every core gate touches out, so the core is one serial chain.
  const std::size_t rz = std::size_t{1} << (n - 1);
  return CoreStats{rz, rz - 1, 2 * rz - 1};
}

}  // namespace lasynth
