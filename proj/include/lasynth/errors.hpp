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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lasynth {

/** Base class of every error raised by the library. */
class LasynthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Malformed gate or circuit, or a gate kind a pass cannot handle. */
class CircuitError : public LasynthError {
 public:
  using LasynthError::LasynthError;
};

/** A counting pass met a gate outside the native basis. */
class NonNativeGateError : public CircuitError {
 public:
  NonNativeGateError(std::size_t gate_index, const std::string &kind)
      : CircuitError(
            "gate " + std::to_string(gate_index) + " (" + kind +
            ") is not a native gate; lower the circuit first"),
        gate_index_(gate_index) {}

  std::size_t gate_index() const { return gate_index_; }

 private:
  std::size_t gate_index_;
};

/** Operator kind / arity combination that has no construction. */
class UnsupportedOperatorError : public LasynthError {
 public:
  using LasynthError::LasynthError;
};

/** Text input that does not follow one of the file formats. */
class ParseError : public LasynthError {
 public:
  ParseError(const std::string &source, std::size_t line, const std::string &what)
      : LasynthError(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/** A file could not be opened, read or written. */
class IoError : public LasynthError {
 public:
  using LasynthError::LasynthError;
};

class RoutingError : public LasynthError {
 public:
  using LasynthError::LasynthError;
};

class SimulationError : public LasynthError {
 public:
  using LasynthError::LasynthError;
};

}  // namespace lasynth
