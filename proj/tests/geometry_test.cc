// Copyright 2026 The symlife Authors
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

#include "symlife/geometry.h"

#include <cmath>
#include <random>

#include "doctest.h"
#include "support/fixtures.h"
#include "symlife/error.h"

namespace symlife {
namespace {

using testing::Uniform;

constexpr double kPi = std::numbers::pi;

bool Close(Point a, Point b, double eps = 1e-12) {
  return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

Isometry RandomIsometry(std::mt19937_64& rng) {
  const Point shift{Uniform(rng, -5, 5), Uniform(rng, -5, 5)};
  const double angle = Uniform(rng, 0, kTwoPi);
  Isometry g = Isometry::Rotation(angle, shift);
  if (rng() % 2 == 0) g = g.Compose(Isometry::Reflection(Uniform(rng, 0, kPi)));
  return g;
}

TEST_CASE("distance") {
  CHECK(Distance({0, 0}, {3, 4}) == 5.0);
  CHECK(Distance({1, 1}, {1, 1}) == 0.0);
  CHECK(Distance({2, -1}, {-3, 7}) == Distance({-3, 7}, {2, -1}));
  const Isometry r = Isometry::Rotation(0.7);
  CHECK(Distance(r({0, 0}), r({1, 0})) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rotation, reflection and identity") {
  CHECK(Close(Isometry::Rotation(kPi / 2)({1, 0}), {0, 1}));
  CHECK(Close(Isometry::Reflection(0.0)({2, 3}), {2, -3}));
  CHECK(Isometry::Identity()({-4.5, 2.25}) == Point{-4.5, 2.25});
  CHECK(Close(Isometry::Rotation(kPi, {1, 1})({2, 1}), {0, 1}));
  CHECK(Close(Isometry::Reflection(kPi / 4, {0, 0})({1, 0}), {0, 1}));
  CHECK(Close(Isometry::Translation({1, -2})({0, 0}), {1, -2}));
  CHECK(Isometry::Reflection(0.3).IsReflection());
  CHECK_FALSE(Isometry::Rotation(0.3).IsReflection());
}

TEST_CASE("non-orthogonal linear part is rejected") {
  CHECK_THROWS_AS(Isometry(Mat2{1, 0.1, 0, 1}, {0, 0}), Error);
  CHECK_THROWS_AS(Isometry(Mat2{2, 0, 0, 2}, {0, 0}), Error);
  CHECK_NOTHROW(Isometry(Mat2{0, -1, 1, 0}, {3, 3}));
}

TEST_CASE("random isometries preserve distance and compose") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Isometry g = RandomIsometry(rng);
    const Isometry h = RandomIsometry(rng);
    const Point a{Uniform(rng, -10, 10), Uniform(rng, -10, 10)};
    const Point b{Uniform(rng, -10, 10), Uniform(rng, -10, 10)};
    const double d = Distance(a, b);
    CHECK(std::abs(Distance(g(a), g(b)) - d) <= 1e-12 * (1 + d));
    const Isometry gh = g.Compose(h);  // throws if not orthogonal
    CHECK(Close(gh(a), g(h(a)), 1e-11));
    CHECK(Close(g.Inverse()(g(a)), a, 1e-11));
  }
}

TEST_CASE("polar angle") {
  CHECK(PolarAngle({1, 0}) == 0.0);
  CHECK(PolarAngle({0, 1}) == doctest::Approx(kPi / 2));
  CHECK(PolarAngle({0, -1}) == doctest::Approx(3 * kPi / 2));
  CHECK(PolarAngle({1, -1e-13}) == 0.0);
}

TEST_CASE("wedge classification") {
  CHECK(ClassifyWedge({1, 0.1}, 4) == Wedge{4, 0, Half::kMinus});
  CHECK(ClassifyWedge({0.5, 0.8}, 4) == Wedge{4, 0, Half::kPlus});
  CHECK(ClassifyWedge({-1, 0.5}, 4) == Wedge{4, 1, Half::kPlus});
  // Sector boundaries start the next sector; the bisector belongs to minus.
  CHECK(ClassifyWedge({0, 1}, 4) == Wedge{4, 1, Half::kMinus});
  CHECK(ClassifyWedge({1, 0}, 4) == Wedge{4, 0, Half::kMinus});
  CHECK(ClassifyWedge({1, 1}, 4) == Wedge{4, 0, Half::kMinus});
  CHECK(ClassifyWedge({1, -1e-12}, 3).sector == 0);
  CHECK_THROWS_WITH_AS(ClassifyWedge({0, 0}, 4),
                       doctest::Contains("center point has full stabilizer"),
                       Error);
  CHECK_THROWS_AS(ClassifyWedge({1, 0}, 1), Error);
}

TEST_CASE("rotating by one sector advances the wedge") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int fold = testing::UniformInt(rng, 2, 9);
    const Point p = testing::Polar(Uniform(rng, 0.5, 4), Uniform(rng, 0, 360));
    const Wedge w = ClassifyWedge(p, fold);
    const Wedge next = ClassifyWedge(Isometry::Rotation(kTwoPi / fold)(p), fold);
    CHECK(next.sector == (w.sector + 1) % fold);
    CHECK(next.half == w.half);
  }
}

}  // namespace
}  // namespace symlife
