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

// Reduction of a symmetric problem to an optimal fundamental region: build
// the restricted instance, solve it, replicate the routing over the group and
// check the result against a solve of the whole network.

#ifndef SYMLIFE_REDUCTION_H_
#define SYMLIFE_REDUCTION_H_

#include <vector>

#include "symlife/canonical.h"
#include "symlife/model.h"
#include "symlife/solver.h"
#include "symlife/symmetry.h"

namespace symlife {

struct ReducedInstance {
  NetworkInstance base;       // collectors first, then sensors
  EnergyMatrix energy;        // restriction of the full energy matrix
  std::vector<int> index_map; // reduced node -> full node
  SymmetryGroup group;
  FundamentalRegion region;
};

// Preconditions (Error(kPrecondition) unless noted): E and Q invariant under
// the group within 1e-9; E monotone in distance; the region was built with
// its closure test passing. An empty collector set is Error(kInfeasible,
// "reduced problem has no sink").
ReducedInstance ReduceInstance(const NetworkInstance& instance,
                               const EnergyMatrix& energy,
                               const SymmetryGroup& group,
                               const FundamentalRegion& region);

// q(g(i), g(j)) = q_reduced(i, j) for every group element g.
Solution LiftSolution(const Solution& reduced_solution,
                      const ReducedInstance& reduced,
                      const NetworkInstance& instance,
                      const EnergyMatrix& energy);

// Solves the reduced instance, routes collector-bound data to the nearest
// collector, cancels two-cycles and lifts the result.
Solution SolveReduced(const ReducedInstance& reduced,
                      const NetworkInstance& instance,
                      const EnergyMatrix& energy);

struct VerifyOptions {
  double tolerance = 1e-6;
  // Reduce over the rotations of a dihedral group instead of the full group.
  bool rotation_only = false;
};

struct ReductionAudit {
  int mirror_crossings = 0;             // lifted edges across a mirror line
  int nearest_collector_violations = 0; // lifted sensor->collector edges
  int orbit_nearest_violations = 0;     // lifted inter-orbit edges
  int locality_violations = 0;          // lifted edges leaving V_m u V_{m-1}^+ u V_{m+1}^-
  int containment_violations = 0;       // region nodes outside V_{M-1}^+ u V_0 u V_1^-
  double intra_orbit_flow = 0.0;        // after canonicalizing the full optimum

  bool Passed() const {
    return mirror_crossings == 0 && nearest_collector_violations == 0 &&
           orbit_nearest_violations == 0 && locality_violations == 0 &&
           containment_violations == 0 && intra_orbit_flow == 0.0;
  }
};

struct ReductionReport {
  GroupKind kind = GroupKind::kTrivial;
  int fold = 1;
  int group_order = 1;
  int region_nodes = 0;  // |F_0|
  int border_collectors = 0;
  int center_collectors = 0;
  int reduced_sensors = 0;
  int reduced_collectors = 0;

  double t_full = 0.0;
  double t_reduced = 0.0;
  double t_lifted = 0.0;
  double t_canonical = 0.0;  // full optimum after Canonicalize
  double gap = 0.0;          // |t_full - t_lifted| / max(t_full, 1e-12)
  double canonical_gap = 0.0;
  double lifted_residual = 0.0;
  InvarianceReport lifted_invariance;
  ReductionAudit audit;

  int flow_variables_full = 0;
  int flow_variables_reduced = 0;
  double seconds_full = 0.0;
  double seconds_reduced = 0.0;

  double tolerance = 0.0;
  bool passed = false;

  Solution full;
  Solution lifted;
};

ReductionReport VerifyReduction(const NetworkInstance& instance,
                                const EnergyMatrix& energy,
                                const SymmetryGroup& group,
                                const VerifyOptions& options = {});

// The individual audits, exposed for tests.
int CountMirrorCrossings(const FlowMatrix& flow, const SymmetryGroup& group,
                         const NetworkInstance& instance);
int CountNearestCollectorViolations(const FlowMatrix& flow,
                                    const NetworkInstance& instance);
int CountOrbitNearestViolations(const FlowMatrix& flow,
                                const OrbitPartition& partition,
                                const NetworkInstance& instance);
int CountLocalityViolations(const FlowMatrix& flow, const SymmetryGroup& group,
                            const NetworkInstance& instance);
int CountContainmentViolations(const FundamentalRegion& region,
                               const SymmetryGroup& group,
                               const NetworkInstance& instance);

}  // namespace symlife

#endif  // SYMLIFE_REDUCTION_H_
