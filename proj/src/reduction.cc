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

#include "symlife/reduction.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "symlife/error.h"

namespace symlife {
namespace {

// Flow entries at or below this are treated as absent by the audits.
constexpr double kEdgeEps = 1e-12;

void RequireInvariantProblem(const NetworkInstance& instance,
                             const EnergyMatrix& energy,
                             const SymmetryGroup& group) {
  const int n = instance.num_nodes();
  for (const GroupElement& g : group.elements) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(instance.Data(g.perm[i]) - instance.Data(i)) >
          1e-9 * (1.0 + std::abs(instance.Data(i)))) {
        throw Error(ErrorCode::kPrecondition,
                    "data volumes are not invariant under the group");
      }
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (std::abs(energy(g.perm[i], g.perm[j]) - energy(i, j)) >
            1e-9 * (1.0 + std::abs(energy(i, j)))) {
          throw Error(ErrorCode::kPrecondition,
                      "energy matrix is not invariant under the group");
        }
      }
    }
  }
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

ReducedInstance ReduceInstance(const NetworkInstance& instance,
                               const EnergyMatrix& energy,
                               const SymmetryGroup& group,
                               const FundamentalRegion& region) {
  if (group.kind == GroupKind::kTrivial) {
    throw Error(ErrorCode::kPrecondition,
                "nothing to reduce: symmetry group is trivial");
  }
  if (energy.size() != instance.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument,
                "energy matrix dimension does not match instance");
  }
  RequireInvariantProblem(instance, energy, group);
  if (!CheckMonotone(energy, instance)) {
    throw Error(ErrorCode::kPrecondition,
                "energy matrix is not monotone in distance");
  }
  if (!region.optimal) {
    throw Error(ErrorCode::kPrecondition,
                "non-optimal region: nearest-element closure failed for the "
                "rotation group");
  }

  std::vector<int> nodes = region.AllNodes();
  std::sort(nodes.begin(), nodes.end());  // collectors precede sensors

  ReducedInstance out;
  out.group = group;
  out.region = region;
  out.base.energy_model = instance.energy_model;
  for (int v : nodes) {
    if (instance.IsCollector(v)) {
      out.base.collectors.push_back(instance.Position(v));
    } else {
      out.base.sensors.push_back(instance.Position(v));
      out.base.data.push_back(instance.Data(v));
    }
    out.index_map.push_back(v);
  }
  if (out.base.collectors.empty()) {
    throw Error(ErrorCode::kInfeasible, "reduced problem has no sink");
  }
  const int m = static_cast<int>(nodes.size());
  out.energy = EnergyMatrix(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) out.energy(a, b) = energy(nodes[a], nodes[b]);
    }
  }
  return out;
}

Solution LiftSolution(const Solution& reduced_solution,
                      const ReducedInstance& reduced,
                      const NetworkInstance& instance,
                      const EnergyMatrix& energy) {
  const int m = static_cast<int>(reduced.index_map.size());
  if (reduced_solution.flow.size() != m) {
    throw Error(ErrorCode::kInvalidArgument,
                "reduced solution does not match reduced instance");
  }
  FlowMatrix flow(instance.num_nodes());
  for (const GroupElement& g : reduced.group.elements) {
    for (int a = 0; a < m; ++a) {
      const int i = g.perm[reduced.index_map[a]];
      for (int b = 0; b < m; ++b) {
        const double q = reduced_solution.flow(a, b);
        if (q != 0.0) flow(i, g.perm[reduced.index_map[b]]) = q;
      }
    }
  }
  return Evaluate(flow, energy, instance);
}

Solution SolveReduced(const ReducedInstance& reduced,
                      const NetworkInstance& instance,
                      const EnergyMatrix& energy) {
  Solution local = SolveMaxLifetime(reduced.base, reduced.energy);
  const FlowMatrix routed =
      CancelPairwise(RedirectToNearestCollector(local.flow, reduced.base));
  const SolveStats stats = local.stats;
  local = Evaluate(routed, reduced.energy, reduced.base);
  local.stats = stats;
  return LiftSolution(local, reduced, instance, energy);
}

int CountMirrorCrossings(const FlowMatrix& flow, const SymmetryGroup& group,
                         const NetworkInstance& instance) {
  const int n = instance.num_nodes();
  int count = 0;
  for (const GroupElement& g : group.elements) {
    if (!g.IsReflection()) continue;
    const Mat2& f = g.iso.linear();
    const double psi = 0.5 * std::atan2(f.c, f.a);
    const Point dir{std::cos(psi), std::sin(psi)};
    auto side = [&](int v) {
      const Point p = instance.Position(v) - group.center;
      return dir.x * p.y - dir.y * p.x;
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (flow(i, j) <= kEdgeEps) continue;
        const double si = side(i);
        const double sj = side(j);
        if (std::abs(si) > group.tolerance && std::abs(sj) > group.tolerance &&
            (si > 0.0) != (sj > 0.0)) {
          ++count;
        }
      }
    }
  }
  return count;
}

int CountNearestCollectorViolations(const FlowMatrix& flow,
                                    const NetworkInstance& instance) {
  const int k = instance.num_collectors();
  int count = 0;
  for (int i = k; i < instance.num_nodes(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      nearest = std::min(nearest, Distance(instance.Position(i), instance.Position(c)));
    }
    for (int c = 0; c < k; ++c) {
      if (flow(i, c) <= kEdgeEps) continue;
      const double d = Distance(instance.Position(i), instance.Position(c));
      if (d > nearest && !NearlyEqual(d, nearest)) ++count;
    }
  }
  return count;
}

int CountOrbitNearestViolations(const FlowMatrix& flow,
                                const OrbitPartition& partition,
                                const NetworkInstance& instance) {
  int count = 0;
  for (int i = instance.num_collectors(); i < instance.num_nodes(); ++i) {
    for (int j = 0; j < instance.num_nodes(); ++j) {
      if (flow(i, j) <= kEdgeEps) continue;
      const int oj = partition.orbit_of[j];
      if (oj == partition.orbit_of[i]) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (int v : partition.orbits[oj]) {
        nearest = std::min(nearest, Distance(instance.Position(i), instance.Position(v)));
      }
      const double d = Distance(instance.Position(i), instance.Position(j));
      if (d > nearest && !NearlyEqual(d, nearest)) ++count;
    }
  }
  return count;
}

int CountLocalityViolations(const FlowMatrix& flow, const SymmetryGroup& group,
                            const NetworkInstance& instance) {
  const int fold = group.fold;
  if (fold < 2) return 0;
  auto wedge = [&](int v) -> std::optional<Wedge> {
    const Point p = group.ToFrame(instance.Position(v));
    if (Norm(p) <= group.tolerance) return std::nullopt;  // center: every V_m
    return ClassifyWedge(p, fold);
  };
  int count = 0;
  for (int i = instance.num_collectors(); i < instance.num_nodes(); ++i) {
    const auto wi = wedge(i);
    if (!wi) continue;
    for (int j = 0; j < instance.num_nodes(); ++j) {
      if (flow(i, j) <= kEdgeEps) continue;
      const auto wj = wedge(j);
      if (!wj) continue;
      const int prev = (wi->sector + fold - 1) % fold;
      const int next = (wi->sector + 1) % fold;
      const bool ok = wj->sector == wi->sector ||
                      (wj->sector == prev && wj->half == Half::kPlus) ||
                      (wj->sector == next && wj->half == Half::kMinus);
      if (!ok) ++count;
    }
  }
  return count;
}

int CountContainmentViolations(const FundamentalRegion& region,
                               const SymmetryGroup& group,
                               const NetworkInstance& instance) {
  const int fold = group.fold;
  if (fold < 2) return 0;
  int count = 0;
  for (int v : region.AllNodes()) {
    const Point p = group.ToFrame(instance.Position(v));
    if (Norm(p) <= group.tolerance) continue;
    const Wedge w = ClassifyWedge(p, fold);
    const bool ok = w.sector == 0 ||
                    (w.sector == 1 % fold && w.half == Half::kMinus) ||
                    (w.sector == fold - 1 && w.half == Half::kPlus);
    if (!ok) ++count;
  }
  return count;
}

ReductionReport VerifyReduction(const NetworkInstance& instance,
                                const EnergyMatrix& energy,
                                const SymmetryGroup& group,
                                const VerifyOptions& options) {
  const SymmetryGroup used =
      options.rotation_only ? group.RotationSubgroup() : group;
  if (used.kind == GroupKind::kTrivial) {
    throw Error(ErrorCode::kPrecondition,
                "nothing to reduce: symmetry group is trivial");
  }
  const OrbitPartition partition = ComputeOrbits(used, instance);
  const FundamentalRegion region =
      ComputeFundamentalRegion(used, instance, partition);
  const ReducedInstance reduced = ReduceInstance(instance, energy, used, region);

  ReductionReport report;
  report.kind = used.kind;
  report.fold = used.fold;
  report.group_order = used.order();
  report.region_nodes = static_cast<int>(region.nodes.size());
  report.border_collectors =
      static_cast<int>(region.border_lower.size() + region.border_upper.size());
  report.center_collectors = static_cast<int>(region.center.size());
  report.reduced_sensors = reduced.base.num_sensors();
  report.reduced_collectors = reduced.base.num_collectors();
  report.tolerance = options.tolerance;

  auto start = std::chrono::steady_clock::now();
  report.full = SolveMaxLifetime(instance, energy);
  report.seconds_full = Seconds(start);

  start = std::chrono::steady_clock::now();
  report.lifted = SolveReduced(reduced, instance, energy);
  report.seconds_reduced = Seconds(start);

  report.t_full = report.full.objective;
  report.t_lifted = report.lifted.objective;
  {
    double t = 0.0;
    for (int a = reduced.base.num_collectors(); a < reduced.base.num_nodes(); ++a) {
      t = std::max(t, report.lifted.sensor_energies[reduced.index_map[a]]);
    }
    report.t_reduced = t;
  }
  report.gap = std::abs(report.t_full - report.t_lifted) /
               std::max(report.t_full, 1e-12);
  report.flow_variables_full = FlowVariableCount(instance);
  report.flow_variables_reduced = FlowVariableCount(reduced.base);
  report.lifted_residual = MaxResidual(report.lifted.flow, instance);
  report.lifted_invariance =
      CheckInvariance(report.lifted.flow, used, kInvarianceTolerance);

  ReductionAudit& audit = report.audit;
  if (used.kind == GroupKind::kDihedral) {
    audit.mirror_crossings = CountMirrorCrossings(report.lifted.flow, used, instance);
  }
  audit.nearest_collector_violations =
      CountNearestCollectorViolations(report.lifted.flow, instance);
  audit.orbit_nearest_violations =
      CountOrbitNearestViolations(report.lifted.flow, partition, instance);
  audit.locality_violations =
      CountLocalityViolations(report.lifted.flow, used, instance);
  audit.containment_violations = CountContainmentViolations(region, used, instance);

  const FlowMatrix canonical =
      Canonicalize(report.full.flow, used, partition, instance);
  for (const std::vector<int>& orbit : partition.orbits) {
    if (instance.IsCollector(orbit.front())) continue;
    for (int a : orbit) {
      for (int b : orbit) {
        audit.intra_orbit_flow = std::max(audit.intra_orbit_flow, canonical(a, b));
      }
    }
  }
  report.t_canonical = Evaluate(canonical, energy, instance).objective;
  report.canonical_gap = std::abs(report.t_canonical - report.t_full) /
                         std::max(report.t_full, 1e-12);

  report.passed = report.gap <= options.tolerance &&
                  report.canonical_gap <= options.tolerance &&
                  report.lifted_residual <= FeasibilityTolerance(instance) &&
                  report.lifted_invariance.is_invariant && audit.Passed();
  return report;
}

}  // namespace symlife
