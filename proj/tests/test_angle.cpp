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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "lasynth/angle.hpp"

using lasynth::Angle;

TEST_CASE("angles are stored in lowest terms", "[angle]") {
  const Angle a(2, 8);
  CHECK(a.num() == 1);
  CHECK(a.den() == 4);
  const Angle b(3, -6);
  CHECK(b.num() == -1);
  CHECK(b.den() == 2);
  CHECK_THROWS(Angle(1, 0));
}

TEST_CASE("angle equality wraps modulo two pi", "[angle]") {
  CHECK(Angle(1, 4) == Angle(9, 4));
  CHECK(Angle(-1, 1) == Angle::pi());
  CHECK(Angle(2, 1) == Angle::zero());
  CHECK_FALSE(Angle(1, 4) == Angle(5, 4));
  CHECK_FALSE(Angle(1, 4).same_representation(Angle(9, 4)));
}

TEST_CASE("angle arithmetic is exact", "[angle]") {
  CHECK((Angle(1, 4) + Angle(1, 4)).same_representation(Angle(1, 2)));
  CHECK((Angle(1, 3) - Angle(1, 6)).same_representation(Angle(1, 6)));
  CHECK(Angle(1, 2).halved().same_representation(Angle(1, 4)));
  CHECK(Angle(3, 8).scaled(2).same_representation(Angle(3, 4)));

  // Halving 23 times and doubling back returns the starting value exactly.
  Angle a = Angle::pi();
  for (int i = 0; i < 23; ++i) a = a.halved();
  CHECK(a.den() == (1 << 23));
  for (int i = 0; i < 23; ++i) a = a + a;
  CHECK(a.same_representation(Angle::pi()));
}

TEST_CASE("canonical representative lies in (-pi, pi]", "[angle]") {
  CHECK(Angle(3, 2).canonical().same_representation(Angle(-1, 2)));
  CHECK(Angle(-1, 1).canonical().same_representation(Angle(1, 1)));
  CHECK(Angle(5, 4).canonical().same_representation(Angle(-3, 4)));
  CHECK(Angle(1, 4).canonical().same_representation(Angle(1, 4)));
}

TEST_CASE("angle radians and text round trip", "[angle]") {
  CHECK(Angle(-1, 4).radians() == Catch::Approx(-std::numbers::pi / 4));
  CHECK(Angle(-1, 4).str() == "-1/4pi");
  for (const Angle a : {Angle(-1, 4), Angle(7, 16), Angle::zero(), Angle::pi()}) {
    const auto back = Angle::parse(a.str());
    REQUIRE(back);
    CHECK(back->same_representation(a));
  }
  CHECK(Angle::parse("pi")->same_representation(Angle::pi()));
  CHECK(Angle::parse("-pi")->same_representation(-Angle::pi()));
  CHECK(Angle::parse("0")->same_representation(Angle::zero()));
  CHECK_FALSE(Angle::parse("1/0pi"));
  CHECK_FALSE(Angle::parse("abc"));
  CHECK_FALSE(Angle::parse("1/4"));
}

TEST_CASE("angle overflow is reported, not wrapped", "[angle]") {
  const Angle tiny(1, std::int64_t{1} << 30);
  CHECK_THROWS(tiny.halved().halved());
}
