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
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "symlife/error.h"

namespace symlife {

std::string KindName(GroupKind kind) {
  switch (kind) {
    case GroupKind::kTrivial:
      return "trivial";
    case GroupKind::kCyclic:
      return "cyclic";
    case GroupKind::kDihedral:
      return "dihedral";
  }
  return "unknown";
}

Point SymmetryGroup::ToFrame(Point p) const {
  return Isometry::Rotation(-frame_angle).Apply(p - center);
}

SymmetryGroup SymmetryGroup::RotationSubgroup() const {
  SymmetryGroup sub = *this;
  sub.elements.clear();
  for (const GroupElement& g : elements) {
    if (!g.IsReflection()) sub.elements.push_back(g);
  }
  sub.fold = sub.order();
  sub.kind = sub.fold >= 2 ? GroupKind::kCyclic : GroupKind::kTrivial;
  return sub;
}

namespace {

bool SameIsometry(const Isometry& a, const Isometry& b) {
  constexpr double kTol = 1e-7;
  const Mat2& x = a.linear();
  const Mat2& y = b.linear();
  return std::abs(x.a - y.a) <= kTol && std::abs(x.b - y.b) <= kTol &&
         std::abs(x.c - y.c) <= kTol && std::abs(x.d - y.d) <= kTol &&
         Distance(a.shift(), b.shift()) <=
             kTol * (1.0 + Norm(a.shift()) + Norm(b.shift()));
}

// Angle normalized to [0, period), snapping values just below `period` to 0.
double NormalizeAngle(double angle, double period) {
  double v = std::fmod(angle, period);
  if (v < 0.0) v += period;
  if (v >= period - kGeoEps) v = 0.0;
  return v;
}

// Rotation angle of a rotation, or direction angle of the mirror line of a
// reflection, read off the linear part.
double LinearAngle(const Isometry& g) {
  const Mat2& m = g.linear();
  if (g.IsReflection()) {
    return NormalizeAngle(0.5 * std::atan2(m.c, m.a), std::numbers::pi);
  }
  return NormalizeAngle(std::atan2(m.c, m.a), kTwoPi);
}

class Matcher {
 public:
  Matcher(const NetworkInstance& instance, double tol)
      : instance_(instance), tol_(tol), n_(instance.num_nodes()) {
    for (int i = 0; i < n_; ++i) center_ = center_ + instance.Position(i);
    center_ = (1.0 / n_) * center_;
    for (int i = 0; i < n_; ++i) {
      rel_.push_back(instance.Position(i) - center_);
      radius_.push_back(Norm(rel_.back()));
    }
  }

  Point center() const { return center_; }

  bool Compatible(int i, int j) const {
    if (instance_.IsCollector(i) != instance_.IsCollector(j)) return false;
    if (std::abs(radius_[i] - radius_[j]) > tol_) return false;
    const double qi = instance_.Data(i);
    const double qj = instance_.Data(j);
    return std::abs(qi - qj) <= 1e-9 * (1.0 + std::max(std::abs(qi), std::abs(qj)));
  }

  // Node permutation induced by the linear map `g` about the centroid, if g
  // maps every node onto a distinct compatible node.
  std::optional<Permutation> Induced(const Isometry& g) const {
    Permutation perm(n_, -1);
    std::vector<bool> used(n_, false);
    for (int i = 0; i < n_; ++i) {
      const Point image = g.linear() * rel_[i];
      int best = -1;
      double best_d = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n_; ++j) {
        if (!Compatible(i, j)) continue;
        const double d = Distance(image, rel_[j]);
        if (d < best_d) {
          best = j;
          best_d = d;
        }
      }
      if (best < 0 || best_d > tol_ || used[best]) return std::nullopt;
      used[best] = true;
      perm[i] = best;
    }
    return perm;
  }

  int Reference() const {
    int best = -1;
    int best_count = std::numeric_limits<int>::max();
    for (int i = 0; i < n_; ++i) {
      if (radius_[i] <= tol_) continue;
      int count = 0;
      for (int j = 0; j < n_; ++j) count += Compatible(i, j) ? 1 : 0;
      if (count < best_count) {
        best = i;
        best_count = count;
      }
    }
    return best;
  }

  double Angle(int i) const { return std::atan2(rel_[i].y, rel_[i].x); }

 private:
  const NetworkInstance& instance_;
  double tol_;
  int n_;
  Point center_;
  std::vector<Point> rel_;
  std::vector<double> radius_;
};

}  // namespace

int SymmetryGroup::Multiply(int a, int b) const {
  const Isometry product = elements[a].iso.Compose(elements[b].iso);
  for (int k = 0; k < order(); ++k) {
    if (SameIsometry(elements[k].iso, product)) return k;
  }
  return -1;
}

int SymmetryGroup::InverseOf(int a) const {
  const Isometry inv = elements[a].iso.Inverse();
  for (int k = 0; k < order(); ++k) {
    if (SameIsometry(elements[k].iso, inv)) return k;
  }
  return -1;
}

SymmetryGroup DetectSymmetryGroup(const NetworkInstance& instance,
                                  std::optional<double> tolerance) {
  RequireValid(instance);
  const int n = instance.num_nodes();
  double diameter = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      diameter = std::max(diameter,
                          Distance(instance.Position(i), instance.Position(j)));
    }
  }
  const double tol = tolerance.value_or(1e-9 * (diameter > 0.0 ? diameter : 1.0));
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "symmetry tolerance must be positive");
  }

  const Matcher matcher(instance, tol);
  SymmetryGroup group;
  group.center = matcher.center();
  group.tolerance = tol;

  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<GroupElement> rotations;
  std::vector<GroupElement> reflections;

  const int ref = matcher.Reference();
  if (ref < 0) {
    rotations.push_back({Isometry::Identity(), identity});
  } else {
    // Any symmetry is fixed by where it sends `ref` and by its orientation.
    for (int b = 0; b < n; ++b) {
      if (!matcher.Compatible(ref, b)) continue;
      const double ta = matcher.Angle(ref);
      const double tb = matcher.Angle(b);
      const Isometry candidates[2] = {
          Isometry::Rotation(b == ref ? 0.0 : tb - ta, group.center),
          Isometry::Reflection(0.5 * (ta + tb), group.center)};
      for (const Isometry& g : candidates) {
        if (auto perm = matcher.Induced(g)) {
          (g.IsReflection() ? reflections : rotations)
              .push_back({g, std::move(*perm)});
        }
      }
    }
  }
  auto by_angle = [](const GroupElement& x, const GroupElement& y) {
    return LinearAngle(x.iso) < LinearAngle(y.iso);
  };
  std::sort(rotations.begin(), rotations.end(), by_angle);
  std::sort(reflections.begin(), reflections.end(), by_angle);

  group.elements = rotations;
  group.elements.insert(group.elements.end(), reflections.begin(),
                        reflections.end());
  group.fold = static_cast<int>(rotations.size());
  if (!reflections.empty()) {
    group.kind = GroupKind::kDihedral;
    group.frame_angle = LinearAngle(reflections.front().iso);
  } else {
    group.kind = group.fold >= 2 ? GroupKind::kCyclic : GroupKind::kTrivial;
  }

  const bool consistent =
      !reflections.empty() ? reflections.size() == rotations.size() : true;
  bool closed = consistent && group.order() >= 1 &&
                group.elements.front().perm == identity &&
                LinearAngle(group.elements.front().iso) == 0.0;
  for (int a = 0; closed && a < group.order(); ++a) {
    for (int b = 0; closed && b < group.order(); ++b) {
      closed = group.Multiply(a, b) >= 0;
    }
  }
  if (!closed) {
    throw Error(ErrorCode::kNumerical,
                "matched isometries do not form a group; tolerance " +
                    std::to_string(tol) + " is inconsistent with the layout");
  }
  return group;
}

OrbitPartition ComputeOrbits(const SymmetryGroup& group,
                             const NetworkInstance& instance) {
  const int n = instance.num_nodes();
  OrbitPartition out;
  out.orbit_of.assign(n, -1);
  out.position.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (out.orbit_of[i] >= 0) continue;
    std::set<int> members;
    for (const GroupElement& g : group.elements) members.insert(g.perm[i]);
    std::vector<int> orbit(members.begin(), members.end());
    std::vector<double> angle(n, 0.0);
    for (int j : orbit) {
      const Point p = group.ToFrame(instance.Position(j));
      angle[j] = Norm(p) <= group.tolerance ? 0.0 : PolarAngle(p);
    }
    std::stable_sort(orbit.begin(), orbit.end(),
                     [&](int a, int b) { return angle[a] < angle[b]; });
    const int index = out.size();
    for (int m = 0; m < static_cast<int>(orbit.size()); ++m) {
      out.orbit_of[orbit[m]] = index;
      out.position[orbit[m]] = m;
    }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

std::vector<GroupElement> Stabilizer(const SymmetryGroup& group, int node) {
  std::vector<GroupElement> out;
  for (const GroupElement& g : group.elements) {
    if (g.perm.at(node) == node) out.push_back(g);
  }
  return out;
}

int StabilizerOrder(const SymmetryGroup& group, int node) {
  int count = 0;
  for (const GroupElement& g : group.elements) count += g.perm.at(node) == node;
  return count;
}

std::vector<int> FundamentalRegion::AllNodes() const {
  std::vector<int> out;
  for (const auto* part : {&nodes, &border_lower, &border_upper, &center}) {
    for (int v : *part) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  return out;
}

namespace {

int CenterNode(const SymmetryGroup& group, const NetworkInstance& instance) {
  for (int i = 0; i < instance.num_nodes(); ++i) {
    if (Norm(group.ToFrame(instance.Position(i))) <= group.tolerance) {
      if (!instance.IsCollector(i)) {
        throw Error(ErrorCode::kPrecondition,
                    "sensor at symmetry center (node " + std::to_string(i + 1) +
                        ") has full stabilizer");
      }
      return i;
    }
  }
  return -1;
}

FundamentalRegion DihedralRegion(const SymmetryGroup& group,
                                 const NetworkInstance& instance,
                                 const OrbitPartition& partition) {
  FundamentalRegion region;
  region.kind = group.kind;
  region.fold = group.fold;
  for (int i = instance.num_collectors(); i < instance.num_nodes(); ++i) {
    if (StabilizerOrder(group, i) > 1) {
      throw Error(ErrorCode::kPrecondition,
                  "nontrivial sensor stabilizer at node " + std::to_string(i + 1) +
                      " (sensor on a mirror line)");
    }
  }
  const int center = CenterNode(group, instance);
  if (center >= 0) region.center.push_back(center);

  const double half = std::numbers::pi / group.fold;
  const double cu = std::cos(half);
  const double su = std::sin(half);
  const double tol = group.tolerance;
  for (int i = 0; i < instance.num_nodes(); ++i) {
    if (i == center) continue;
    const Point p = group.ToFrame(instance.Position(i));
    const bool on_lower = std::abs(p.y) <= tol && p.x > 0.0;
    const bool on_upper = std::abs(-su * p.x + cu * p.y) <= tol &&
                          cu * p.x + su * p.y > 0.0;
    if (on_lower || on_upper) {
      (on_lower ? region.border_lower : region.border_upper).push_back(i);
      continue;
    }
    const double theta = PolarAngle(p);
    if (theta > 0.0 && theta < half) region.nodes.push_back(i);
  }

  std::vector<int> hits(partition.size(), 0);
  for (int v : region.AllNodes()) ++hits[partition.orbit_of[v]];
  for (int h : hits) {
    if (h != 1) {
      throw Error(ErrorCode::kNumerical,
                  "mirror wedge does not meet every orbit exactly once");
    }
  }
  return region;
}

FundamentalRegion RotationRegion(const SymmetryGroup& group,
                                 const NetworkInstance& instance,
                                 const OrbitPartition& partition) {
  FundamentalRegion region;
  region.kind = group.kind;
  region.fold = group.fold;
  const int center = CenterNode(group, instance);
  if (center >= 0) region.center.push_back(center);

  std::vector<int> orbit_ids;
  for (int o = 0; o < partition.size(); ++o) {
    if (partition.orbits[o].front() != center) orbit_ids.push_back(o);
  }
  if (orbit_ids.empty()) return region;

  auto d = [&](int a, int b) {
    return Distance(instance.Position(a), instance.Position(b));
  };
  // Seed: position-0 member of the first orbit; from every other orbit the
  // member nearest to the seed, ties to the smallest position (members are
  // stored in position order).
  const int seed = partition.orbits[orbit_ids.front()].front();
  std::vector<int> rep(partition.size(), -1);
  for (int o : orbit_ids) {
    int best = -1;
    for (int v : partition.orbits[o]) {
      if (best < 0 || (d(seed, v) < d(seed, best) &&
                       !NearlyEqual(d(seed, v), d(seed, best)))) {
        best = v;
      }
    }
    rep[o] = best;
  }

  bool closed = true;
  for (int oi : orbit_ids) {
    for (int oj : orbit_ids) {
      if (oi == oj) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (int v : partition.orbits[oj]) nearest = std::min(nearest, d(rep[oi], v));
      if (!NearlyEqual(d(rep[oi], rep[oj]), nearest)) closed = false;
    }
  }
  for (int o : orbit_ids) {
    region.nodes.push_back(closed ? rep[o] : partition.orbits[o].front());
  }
  region.optimal = closed;
  return region;
}

}  // namespace

FundamentalRegion ComputeFundamentalRegion(const SymmetryGroup& group,
                                           const NetworkInstance& instance,
                                           const OrbitPartition& partition) {
  switch (group.kind) {
    case GroupKind::kTrivial:
      throw Error(ErrorCode::kPrecondition,
                  "nothing to reduce: symmetry group is trivial");
    case GroupKind::kDihedral:
      return DihedralRegion(group, instance, partition);
    case GroupKind::kCyclic:
      return RotationRegion(group, instance, partition);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown group kind");
}

}  // namespace symlife
