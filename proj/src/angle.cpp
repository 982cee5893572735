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

#include "lasynth/angle.hpp"

#include <charconv>
#include <limits>
#include <numbers>
#include <numeric>

#include "lasynth/errors.hpp"

namespace lasynth {

namespace {

std::int32_t narrow(std::int64_t v) {
  if (v > std::numeric_limits<std::int32_t>::max() ||
      v < std::numeric_limits<std::int32_t>::min()) {
    throw CircuitError("angle component overflow: " + std::to_string(v));
  }
  return static_cast<std::int32_t>(v);
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

Angle::Angle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw CircuitError("angle with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = narrow(num);
  den_ = narrow(den);
}

double Angle::radians() const {
  return std::numbers::pi * static_cast<double>(num_) /
         static_cast<double>(den_);
}

Angle Angle::canonical() const {
  // num/den mod 2, shifted into (-1, 1].
  const std::int64_t period = 2 * std::int64_t{den_};
  std::int64_t r = std::int64_t{num_} % period;
  if (r <= -std::int64_t{den_}) r += period;
  if (r > std::int64_t{den_}) r -= period;
  return {r, den_};
}

Angle Angle::operator+(const Angle &other) const {
  const std::int64_t l = std::lcm(std::int64_t{den_}, std::int64_t{other.den_});
  return {num_ * (l / den_) + other.num_ * (l / other.den_), l};
}

bool operator==(const Angle &a, const Angle &b) {
  const Angle d = a - b;
  return d.den() == 1 && d.num() % 2 == 0;
}

std::string Angle::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_) + "pi";
}

std::optional<Angle> Angle::parse(std::string_view text) {
  if (text == "0") return Angle{};
  if (text == "pi") return Angle::pi();
  if (text == "-pi") return -Angle::pi();
  if (text.size() < 3 || text.substr(text.size() - 2) != "pi") return std::nullopt;
  text.remove_suffix(2);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  try {
    return Angle{*num, *den};
  } catch (const CircuitError &) {
    return std::nullopt;
  }
}

}  // namespace lasynth
