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

#include "symlife/canonical.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "symlife/error.h"

namespace symlife {

FlowMatrix ConjugateFlow(const GroupElement& g, const FlowMatrix& flow) {
  if (static_cast<int>(g.perm.size()) != flow.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "group element and flow matrix dimensions differ");
  }
  return Conjugate(flow, g.perm);
}

FlowMatrix Symmetrize(const FlowMatrix& flow, const SymmetryGroup& group) {
  const int n = flow.size();
  FlowMatrix out(n);
  std::vector<bool> done(static_cast<std::size_t>(n) * n, false);
  std::vector<std::pair<int, int>> pair_orbit;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (done[static_cast<std::size_t>(i) * n + j]) continue;
      double sum = 0.0;
      bool uniform = true;
      pair_orbit.clear();
      for (const GroupElement& g : group.elements) {
        const int a = g.perm[i];
        const int b = g.perm[j];
        sum += flow(a, b);
        uniform = uniform && flow(a, b) == flow(i, j);
        pair_orbit.emplace_back(a, b);
      }
      const double mean = uniform ? flow(i, j) : sum / group.order();
      for (const auto& [a, b] : pair_orbit) {
        out(a, b) = mean;
        done[static_cast<std::size_t>(a) * n + b] = true;
      }
    }
  }
  return out;
}

InvarianceReport CheckInvariance(const FlowMatrix& flow,
                                 const SymmetryGroup& group, double tolerance) {
  InvarianceReport report;
  report.tolerance = tolerance;
  const int n = flow.size();
  for (const GroupElement& g : group.elements) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        report.max_violation = std::max(
            report.max_violation, std::abs(flow(g.perm[i], g.perm[j]) - flow(i, j)));
      }
    }
  }
  report.is_invariant = report.max_violation <= tolerance;
  return report;
}

FlowMatrix CancelPairwise(const FlowMatrix& flow) {
  FlowMatrix out = flow;
  for (int i = 0; i < out.size(); ++i) {
    for (int j = i + 1; j < out.size(); ++j) {
      const double m = std::min(out(i, j), out(j, i));
      if (m <= 0.0) continue;
      if (out(i, j) >= out(j, i)) {
        out(i, j) -= m;
        out(j, i) = 0.0;
      } else {
        out(j, i) -= m;
        out(i, j) = 0.0;
      }
    }
  }
  return out;
}

FlowMatrix RemoveIntraOrbit(const FlowMatrix& flow,
                            const OrbitPartition& partition,
                            const SymmetryGroup& group,
                            const NetworkInstance& instance) {
  if (!CheckInvariance(flow, group, kInvarianceTolerance).is_invariant) {
    throw Error(ErrorCode::kPrecondition,
                "intra-orbit removal requires invariant flow");
  }
  FlowMatrix out = flow;
  for (const std::vector<int>& orbit : partition.orbits) {
    if (instance.IsCollector(orbit.front())) continue;
    for (int a : orbit) {
      for (int b : orbit) out(a, b) = 0.0;
    }
  }
  return out;
}

FlowMatrix RedirectToNearestCollector(const FlowMatrix& flow,
                                      const NetworkInstance& instance) {
  FlowMatrix out = flow;
  const int k = instance.num_collectors();
  for (int i = k; i < instance.num_nodes(); ++i) {
    int nearest = 0;
    double total = 0.0;
    for (int c = 0; c < k; ++c) {
      const double dc = Distance(instance.Position(i), instance.Position(c));
      const double dn =
          Distance(instance.Position(i), instance.Position(nearest));
      if (dc < dn && !NearlyEqual(dc, dn)) nearest = c;
      total += out(i, c);
      out(i, c) = 0.0;
    }
    out(i, nearest) = total;
  }
  return out;
}

FlowMatrix Canonicalize(const FlowMatrix& flow, const SymmetryGroup& group,
                        const OrbitPartition& partition,
                        const NetworkInstance& instance) {
  const FlowMatrix invariant = Symmetrize(flow, group);
  return CancelPairwise(RemoveIntraOrbit(invariant, partition, group, instance));
}

}  // namespace symlife
