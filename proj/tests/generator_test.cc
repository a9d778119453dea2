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

#include "symlife/generator.h"

#include "doctest.h"
#include "support/fixtures.h"
#include "symlife/error.h"
#include "symlife/symmetry.h"

namespace symlife {
namespace {

GeneratorSpec Cyclic(int fold, std::vector<GeneratorSeed> seeds) {
  GeneratorSpec spec;
  spec.kind = GroupKind::kCyclic;
  spec.fold = fold;
  spec.seeds = std::move(seeds);
  return spec;
}

TEST_CASE("two seeds under four-fold rotation") {
  const NetworkInstance net =
      Generate(Cyclic(4, {{{1, 0.3}, false, 1}, {{2, 0.3}, false, 1}}));
  CHECK(net.num_sensors() == 8);
  CHECK(net.num_collectors() == 1);
  CHECK(net.collectors[0] == Point{0, 0});
  const SymmetryGroup g = DetectSymmetryGroup(net);
  CHECK(g.order() >= 4);
  CHECK(g.kind == GroupKind::kCyclic);
  // Orbit-major, members by increasing angle.
  CHECK(net.sensors[0] == Point{1, 0.3});
  CHECK(PolarAngle(net.sensors[1]) > PolarAngle(net.sensors[0]));
  CHECK(net.sensors[4] == Point{2, 0.3});
}

TEST_CASE("smallest case") {
  const NetworkInstance net = Generate(Cyclic(2, {{{1, 0.5}, false, 1}}));
  CHECK(net.num_sensors() == 2);
  CHECK(DetectSymmetryGroup(net).order() >= 2);
}

TEST_CASE("dihedral layout with border collectors") {
  const NetworkInstance net = Generate(testing::Dihedral4Spec());
  CHECK(net.num_sensors() == 7 * 8);
  CHECK(net.num_collectors() == 1 + 8 + 2 * 4 + 4);
  const SymmetryGroup g = DetectSymmetryGroup(net);
  CHECK(g.kind == GroupKind::kDihedral);
  CHECK(g.order() == 8);
}

TEST_CASE("invalid seeds") {
  CHECK_THROWS_WITH_AS(Generate(Cyclic(4, {{{1, 0}, false, 1}})),
                       doctest::Contains("generating wedge boundary"), Error);
  CHECK_THROWS_WITH_AS(Generate(Cyclic(4, {{{0, 1}, false, 1}})),
                       doctest::Contains("generating wedge boundary"), Error);
  CHECK_THROWS_WITH_AS(Generate(Cyclic(4, {{{-1, 1}, false, 1}})),
                       doctest::Contains("outside"), Error);
  CHECK_THROWS_WITH_AS(Generate(Cyclic(4, {{{0, 0}, false, 1}})),
                       doctest::Contains("origin"), Error);
  CHECK_THROWS_AS(Generate(Cyclic(1, {{{1, 0.2}, false, 1}})), Error);

  GeneratorSpec mirror = Cyclic(4, {{testing::Polar(1, 45), false, 1}});
  mirror.kind = GroupKind::kDihedral;
  CHECK_THROWS_WITH_AS(Generate(mirror), doctest::Contains("mirror line"), Error);

  GeneratorSpec border = Cyclic(4, {{{1, 0.3}, false, 1}});
  border.border_lower_radii = {2};
  CHECK_THROWS_AS(Generate(border), Error);
}

TEST_CASE("random seeds are reproducible") {
  const GeneratorSpec a = testing::RandomSymmetricSpec(GroupKind::kCyclic, 6, 12);
  GeneratorSpec b = a;
  CHECK(Generate(a).sensors == Generate(b).sensors);
  b.rng_seed = 13;
  CHECK(Generate(a).sensors != Generate(b).sensors);
}

TEST_CASE("random orbits keep their exact group") {
  for (GroupKind kind : {GroupKind::kCyclic, GroupKind::kDihedral}) {
    for (int fold = 2; fold <= 8; ++fold) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const NetworkInstance net =
            Generate(testing::RandomSymmetricSpec(kind, fold, seed));
        CHECK(ValidateInstance(net).empty());
        const SymmetryGroup g = DetectSymmetryGroup(net);
        CHECK(g.kind == kind);
        CHECK(g.fold == fold);
      }
    }
  }
}

}  // namespace
}  // namespace symlife
