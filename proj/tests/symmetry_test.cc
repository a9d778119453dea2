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

#include "symlife/symmetry.h"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "support/fixtures.h"
#include "symlife/error.h"
#include "symlife/generator.h"
#include "symlife/reduction.h"

namespace symlife {
namespace {

std::vector<int> OrbitSizes(const OrbitPartition& p) {
  std::vector<int> sizes;
  for (const auto& o : p.orbits) sizes.push_back(static_cast<int>(o.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Three orbits under four-fold rotation whose nearest-member choice is not
// closed: the middle orbit's representative is nearer to a different member
// of the third orbit than the seed is.
NetworkInstance OpenPinwheel() {
  NetworkInstance out{{{0, 0}}, {}, {}, testing::SquaredDistance()};
  for (auto [r, deg] : std::vector<std::pair<double, double>>{
           {1.0, 0}, {1.2, 40}, {1.1, 80}}) {
    for (int k = 0; k < 4; ++k) {
      out.sensors.push_back(testing::Polar(r, deg + 90.0 * k));
      out.data.push_back(1.0);
    }
  }
  return out;
}

void CheckGroupAxioms(const SymmetryGroup& g) {
  REQUIRE(g.order() >= 1);
  for (std::size_t i = 0; i < g.elements[0].perm.size(); ++i) {
    CHECK(g.elements[0].perm[i] == static_cast<int>(i));
  }
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.InverseOf(a) >= 0);
    for (int b = 0; b < g.order(); ++b) CHECK(g.Multiply(a, b) >= 0);
  }
}

TEST_CASE("detected groups") {
  SymmetryGroup g = DetectSymmetryGroup(testing::SquareWithCenter());
  CHECK(g.kind == GroupKind::kDihedral);
  CHECK(g.fold == 4);
  CHECK(g.order() == 8);
  CheckGroupAxioms(g);

  g = DetectSymmetryGroup(testing::Scalene());
  CHECK(g.kind == GroupKind::kTrivial);
  CHECK(g.order() == 1);

  g = DetectSymmetryGroup(testing::Pinwheel());
  CHECK(g.kind == GroupKind::kCyclic);
  CHECK(g.order() == 4);
  CheckGroupAxioms(g);

  g = DetectSymmetryGroup(testing::Chain());
  CHECK(g.kind == GroupKind::kDihedral);
  CHECK(g.order() == 2);
}

TEST_CASE("data volumes take part in detection") {
  NetworkInstance net = testing::SquareWithCenter();
  net.data = {1, 2, 1, 2};
  const SymmetryGroup g = DetectSymmetryGroup(net);
  CHECK(g.order() == 4);  // rotations by pi and the two axis mirrors
  CHECK(g.kind == GroupKind::kDihedral);
}

TEST_CASE("orbits") {
  const NetworkInstance square = testing::SquareWithCenter();
  const OrbitPartition p = ComputeOrbits(DetectSymmetryGroup(square), square);
  CHECK(OrbitSizes(p) == std::vector<int>{1, 4});
  CHECK(p.orbits[0] == std::vector<int>{0});

  const NetworkInstance scalene = testing::Scalene();
  CHECK(ComputeOrbits(DetectSymmetryGroup(scalene), scalene).size() ==
        scalene.num_nodes());

  const NetworkInstance pin = testing::Pinwheel();
  const OrbitPartition q = ComputeOrbits(DetectSymmetryGroup(pin), pin);
  CHECK(OrbitSizes(q) == std::vector<int>{1, 4, 4});
  // Positions count anticlockwise from the +X axis.
  CHECK(q.position[1] == 0);
  CHECK(q.position[2] == 1);
  CHECK(q.position[4] == 3);
}

TEST_CASE("stabilizers") {
  const NetworkInstance pin = testing::Pinwheel();
  const SymmetryGroup g = DetectSymmetryGroup(pin);
  CHECK(StabilizerOrder(g, 0) == 4);
  CHECK(StabilizerOrder(g, 6) == 1);

  const NetworkInstance square = testing::SquareWithCenter();
  const SymmetryGroup d = DetectSymmetryGroup(square);
  const std::vector<GroupElement> st = Stabilizer(d, 1);
  REQUIRE(st.size() == 2);
  CHECK_FALSE(st[0].IsReflection());
  CHECK(st[1].IsReflection());
}

TEST_CASE("rotation subgroup region of the aligned network") {
  const NetworkInstance net = testing::AlignedSquares();
  const SymmetryGroup g = DetectSymmetryGroup(net).RotationSubgroup();
  CHECK(g.kind == GroupKind::kCyclic);
  CHECK(g.order() == 4);
  const FundamentalRegion r = ComputeFundamentalRegion(g, net, ComputeOrbits(g, net));
  CHECK(r.optimal);
  REQUIRE(r.nodes.size() == 2);
  CHECK(net.Position(r.nodes[0]) == Point{1, 0});
  CHECK(net.Position(r.nodes[1]) == Point{2, 0});
  CHECK(r.center == std::vector<int>{0});
}

TEST_CASE("dihedral region with border collectors") {
  const NetworkInstance net = Generate(testing::Dihedral4Spec());
  const SymmetryGroup g = DetectSymmetryGroup(net);
  CHECK(g.kind == GroupKind::kDihedral);
  CHECK(g.order() == 8);
  const FundamentalRegion r = ComputeFundamentalRegion(g, net, ComputeOrbits(g, net));
  int sensors = 0;
  int collectors = 0;
  for (int v : r.nodes) (net.IsCollector(v) ? collectors : sensors)++;
  CHECK(sensors == 7);
  CHECK(collectors == 1);
  CHECK(r.border_lower.size() + r.border_upper.size() == 3);
  CHECK(r.center.size() == 1);
  CHECK(CountContainmentViolations(r, g, net) == 0);
}

TEST_CASE("sensors on mirror lines are rejected") {
  const NetworkInstance net = testing::SquareWithCenter();
  const SymmetryGroup g = DetectSymmetryGroup(net);
  CHECK_THROWS_WITH_AS(ComputeFundamentalRegion(g, net, ComputeOrbits(g, net)),
                       doctest::Contains("nontrivial sensor stabilizer"), Error);
}

TEST_CASE("trivial group has no region") {
  const NetworkInstance net = testing::Scalene();
  const SymmetryGroup g = DetectSymmetryGroup(net);
  CHECK_THROWS_WITH_AS(ComputeFundamentalRegion(g, net, ComputeOrbits(g, net)),
                       doctest::Contains("nothing to reduce"), Error);
}

TEST_CASE("sensor at the center is rejected") {
  NetworkInstance net{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 0}}, {1},
                      testing::SquaredDistance()};
  const SymmetryGroup g = DetectSymmetryGroup(net).RotationSubgroup();
  CHECK_THROWS_AS(ComputeFundamentalRegion(g, net, ComputeOrbits(g, net)), Error);
}

TEST_CASE("open nearest-member choice falls back and is flagged") {
  const NetworkInstance net = OpenPinwheel();
  const SymmetryGroup g = DetectSymmetryGroup(net);
  REQUIRE(g.kind == GroupKind::kCyclic);
  const FundamentalRegion r = ComputeFundamentalRegion(g, net, ComputeOrbits(g, net));
  CHECK_FALSE(r.optimal);
  CHECK(r.nodes.size() == 3);
}

TEST_CASE("generated instances: orbit-stabilizer, cover, rotation invariance") {
  std::mt19937_64 rng(17);
  for (GroupKind kind : {GroupKind::kCyclic, GroupKind::kDihedral}) {
    for (int fold = 2; fold <= 8; ++fold) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const NetworkInstance net =
            Generate(testing::RandomSymmetricSpec(kind, fold, seed));
        const SymmetryGroup g = DetectSymmetryGroup(net);
        CHECK(g.kind == kind);
        CHECK(g.fold == fold);
        CheckGroupAxioms(g);
        const OrbitPartition p = ComputeOrbits(g, net);
        for (int v = 0; v < net.num_nodes(); ++v) {
          const int orbit = static_cast<int>(p.orbits[p.orbit_of[v]].size());
          CHECK(orbit * StabilizerOrder(g, v) == g.order());
        }

        const FundamentalRegion r = ComputeFundamentalRegion(g, net, p);
        REQUIRE(r.optimal);
        std::vector<int> hits(net.num_nodes(), 0);
        for (const GroupElement& e : g.elements) {
          for (int v : r.nodes) hits[e.perm[v]]++;
        }
        for (int v : r.nodes) {
          for (int w : p.orbits[p.orbit_of[v]]) {
            CHECK(hits[w] == StabilizerOrder(g, w));
          }
        }

        const Point c = g.center;
        const NetworkInstance turned = Transform(
            net, Isometry::Rotation(testing::Uniform(rng, 0, kTwoPi), c));
        const SymmetryGroup h = DetectSymmetryGroup(turned);
        CHECK(h.kind == g.kind);
        CHECK(h.order() == g.order());
      }
    }
  }
}

}  // namespace
}  // namespace symlife
