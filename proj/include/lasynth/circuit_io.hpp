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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lasynth/circuit.hpp"

namespace lasynth {

/**
 * Line-oriented circuit text format:
 *
 *   qubits 3
 *   label 2 out
 *   H 2
 *   RZ 2 angle=-1/4pi
 *   CNOT 1,2
 *
 * `#` starts a comment. Every gate kind round-trips; angles are exact.
 */
void write_circuit_text(std::ostream &os, const Circuit &c);
std::string to_circuit_text(const Circuit &c);
Circuit read_circuit_text(std::istream &is, const std::string &source = "<input>");
Circuit parse_circuit_text(std::string_view text, const std::string &source = "<input>");

/**
 * OpenQASM 2.0 with a single register `q`. ECR and the controlled-√X†
 * macro are emitted with inline gate definitions.
 */
void write_qasm(std::ostream &os, const Circuit &c);
std::string to_qasm(const Circuit &c);

/** Reads back the subset write_qasm produces. */
Circuit parse_qasm(std::string_view text, const std::string &source = "<qasm>");

}  // namespace lasynth
