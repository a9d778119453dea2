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

// Finite isometry groups of a labeled planar network: detection, orbits,
// stabilizers and fundamental regions.
//
// A finite set is mapped onto itself only by isometries fixing its centroid,
// so every detected group is a subgroup of O(2) about the centroid: cyclic
// (M rotations) or dihedral (M rotations and M reflections). Group elements
// must send collectors to collectors and sensors to sensors carrying the same
// data volume, so the detected group is a symmetry of the whole problem and
// not only of the point set.

#ifndef SYMLIFE_SYMMETRY_H_
#define SYMLIFE_SYMMETRY_H_

#include <optional>
#include <string>
#include <vector>

#include "symlife/geometry.h"
#include "symlife/model.h"

namespace symlife {

struct GroupElement {
  Isometry iso;
  Permutation perm;  // node i is carried onto node perm[i]

  bool IsReflection() const { return iso.IsReflection(); }
};

enum class GroupKind { kTrivial, kCyclic, kDihedral };

std::string KindName(GroupKind kind);

struct SymmetryGroup {
  // elements[0] is the identity, then rotations by increasing angle, then
  // reflections by increasing mirror angle.
  std::vector<GroupElement> elements;
  GroupKind kind = GroupKind::kTrivial;
  int fold = 1;  // number of rotations, M
  Point center;
  // Angle of the first mirror line (dihedral); coordinates are rotated by
  // -frame_angle about the center so that this mirror becomes the +X axis.
  double frame_angle = 0.0;
  double tolerance = kGeoEps;  // matching tolerance used at detection

  int order() const { return static_cast<int>(elements.size()); }

  // Position relative to the center in the normalized frame.
  Point ToFrame(Point p) const;

  // The rotations alone, as a cyclic (or trivial) group with the same frame.
  SymmetryGroup RotationSubgroup() const;

  // Index of the element equal to elements[a] o elements[b]; -1 if the set
  // is not closed.
  int Multiply(int a, int b) const;
  int InverseOf(int a) const;
};

// Largest group of isometries fixing the centroid that maps the network onto
// itself within `tolerance` (default 1e-9 times the network diameter).
// Deterministic for a fixed input; returns the trivial group when nothing
// else matches.
SymmetryGroup DetectSymmetryGroup(const NetworkInstance& instance,
                                  std::optional<double> tolerance = {});

struct OrbitPartition {
  // Orbits ordered by their smallest node index; members ordered by position.
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;  // node -> orbit index
  // node -> position m inside its orbit, counted anticlockwise from the +X
  // axis of the group frame.
  std::vector<int> position;

  int size() const { return static_cast<int>(orbits.size()); }
};

OrbitPartition ComputeOrbits(const SymmetryGroup& group,
                             const NetworkInstance& instance);

// Elements whose permutation fixes `node`.
std::vector<GroupElement> Stabilizer(const SymmetryGroup& group, int node);
int StabilizerOrder(const SymmetryGroup& group, int node);

struct FundamentalRegion {
  GroupKind kind = GroupKind::kTrivial;
  int fold = 1;
  std::vector<int> nodes;         // F_0, including interior collectors
  std::vector<int> border_lower;  // C_0: collectors on the mirror along +X
  std::vector<int> border_upper;  // C_1: collectors on the mirror at pi/M
  std::vector<int> center;        // collector at the symmetry center, if any
  // False when the nearest-element construction for a rotation group failed
  // its closure test and the region inside V_0 was used instead.
  bool optimal = true;

  // F_0, then C_0, C_1 and the center collector, without duplicates.
  std::vector<int> AllNodes() const;
};

// Dihedral groups: F_0 is every node strictly inside the wedge between the
// mirror lines at angles 0 and pi/M, with collectors on the two bounding
// half-lines in C_0 / C_1. Requires every sensor to have a trivial
// stabilizer.
//
// Cyclic groups: F_0 is seeded with the position-0 member of the first
// orbit; every other orbit contributes its member nearest to the seed (ties
// to the smallest position). Each member of F_0 must then be nearest to F_0's
// representative of every other orbit; otherwise the V_0 members are returned
// with `optimal = false`.
//
// Throws Error(kPrecondition) for the trivial group, a sensor at the center
// or (dihedral) a sensor on a mirror line.
FundamentalRegion ComputeFundamentalRegion(const SymmetryGroup& group,
                                           const NetworkInstance& instance,
                                           const OrbitPartition& partition);

}  // namespace symlife

#endif  // SYMLIFE_SYMMETRY_H_
