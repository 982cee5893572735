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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lasynth::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIo = 3,
  kParse = 4,
  kUnsupported = 5,
  kModule = 6,
};

struct CommandConfig {
  std::string subcommand;
  std::optional<std::string> op;
  std::optional<unsigned> n;
  std::string variant = "h";
  bool conventional = false;
  std::optional<std::string> map;
  std::optional<unsigned> target;
  /** star | best | random | comma-separated physical qubits in logical order */
  std::optional<std::string> placement;
  std::string basis = "cnot";
  std::optional<std::string> output;
  bool pretty = false;
  std::optional<std::string> input;
  /** Bit string |q_{n-1} ... q_0> or a decimal basis index. */
  std::optional<std::string> init;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::vector<std::string> ops;
};

/** Throws UsageError naming the first conflicting or missing flag. */
void validate(const CommandConfig &config);

/** Executes a validated command; diagnostics go to `err`. */
int run(const CommandConfig &config, std::ostream &out, std::ostream &err);

/** Parses argv (CLI11) and runs; the process entry point. */
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace lasynth::cli
