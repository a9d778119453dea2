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

// Post-processing of optimal flows: conjugation by group elements, uniform
// group averaging, invariance checks and the flow-reducing rewrites that do
// not raise any sensor's energy.

#ifndef SYMLIFE_CANONICAL_H_
#define SYMLIFE_CANONICAL_H_

#include "symlife/model.h"
#include "symlife/symmetry.h"

namespace symlife {

// Absolute tolerance on flow entries for "q is invariant" preconditions.
inline constexpr double kInvarianceTolerance = 1e-9;

struct InvarianceReport {
  double max_violation = 0.0;  // max_{g,i,j} |q(g i, g j) - q(i, j)|
  bool is_invariant = true;
  double tolerance = 0.0;
};

// r(g(i), g(j)) = q(i, j).
FlowMatrix ConjugateFlow(const GroupElement& g, const FlowMatrix& flow);

// (1/|G|) sum_g g q g^{-1}, computed once per orbit of index pairs so the
// result is exactly invariant. Pairs whose orbit already carries a single
// value keep it bit-for-bit.
FlowMatrix Symmetrize(const FlowMatrix& flow, const SymmetryGroup& group);

InvarianceReport CheckInvariance(const FlowMatrix& flow,
                                 const SymmetryGroup& group, double tolerance);

// Subtracts min(q(i,j), q(j,i)) from both entries of every pair. Each net
// flow q(i,j) - q(j,i) is unchanged bit-for-bit.
FlowMatrix CancelPairwise(const FlowMatrix& flow);

// Zeroes flow between sensors of the same orbit. Requires `flow` to be
// invariant within kInvarianceTolerance (Error(kPrecondition) otherwise);
// invariance makes intra-orbit in- and outflow equal at every node, so
// conservation is preserved.
FlowMatrix RemoveIntraOrbit(const FlowMatrix& flow,
                            const OrbitPartition& partition,
                            const SymmetryGroup& group,
                            const NetworkInstance& instance);

// Moves all collector-bound data of every sensor onto its nearest collector
// (ties to the smallest index). Never raises an energy when cost grows with
// distance.
FlowMatrix RedirectToNearestCollector(const FlowMatrix& flow,
                                      const NetworkInstance& instance);

// symmetrize -> remove intra-orbit flow -> cancel two-cycles.
FlowMatrix Canonicalize(const FlowMatrix& flow, const SymmetryGroup& group,
                        const OrbitPartition& partition,
                        const NetworkInstance& instance);

}  // namespace symlife

#endif  // SYMLIFE_CANONICAL_H_
