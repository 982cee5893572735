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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lasynth {

/**
 * An exact rotation angle, stored as (num/den)·π with den > 0 and the
 * fraction in lowest terms.
 *
 * The stored value is not wrapped, so repeated halving and sign flips stay
 * bit-stable. Equality is taken modulo 2π: Angle(1, 4) == Angle(9, 4).
 * Components are kept in 32 bits; arithmetic that would overflow throws.
 */
class Angle {
 public:
  constexpr Angle() = default;
  Angle(std::int64_t num, std::int64_t den);

  static Angle zero() { return {}; }
  static Angle pi() { return {1, 1}; }
  static Angle pi_over(std::int64_t den) { return {1, den}; }

  std::int32_t num() const { return num_; }
  std::int32_t den() const { return den_; }

  double radians() const;

  /** Representative in (-π, π]. */
  Angle canonical() const;

  bool is_zero() const { return *this == Angle{}; }

  Angle operator-() const { return {-std::int64_t{num_}, den_}; }
  Angle operator+(const Angle &other) const;
  Angle operator-(const Angle &other) const { return *this + (-other); }
  Angle &operator+=(const Angle &other) { return *this = *this + other; }
  Angle halved() const { return {num_, std::int64_t{den_} * 2}; }
  Angle scaled(std::int64_t factor) const { return {num_ * factor, den_}; }

  /** Equal modulo 2π. */
  friend bool operator==(const Angle &a, const Angle &b);

  /** Identical stored fraction (no wrapping). */
  bool same_representation(const Angle &other) const {
    return num_ == other.num_ && den_ == other.den_;
  }

  /** "-1/4pi", "1/1pi", "0/1pi". */
  std::string str() const;

  /** Parses the str() form ("<num>/<den>pi") and the shorthands "pi", "-pi", "0". */
  static std::optional<Angle> parse(std::string_view text);

 private:
  std::int32_t num_ = 0;
  std::int32_t den_ = 1;
};

}  // namespace lasynth
