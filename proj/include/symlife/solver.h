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

// Maximum-lifetime routing: minimize the largest per-cycle sensor energy
//
//   min_q max_i  E_i(q),   E_i(q) = sum_{j != i} q(i, j) * E(i, j),
//
// subject to per-sensor flow conservation and q >= 0 with collector rows
// fixed at zero. Solved exactly through the epigraph linear program
// (minimize t with E_i(q) <= t).

#ifndef SYMLIFE_SOLVER_H_
#define SYMLIFE_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "symlife/model.h"

namespace symlife {

struct SolveStats {
  int flow_variables = 0;  // q(i, j) columns of the program
  int rows = 0;
  int iterations = 0;
};

struct Solution {
  FlowMatrix flow;
  double objective = 0.0;               // t* = max sensor energy
  std::vector<double> sensor_energies;  // per node; zero for collectors
  std::vector<double> collector_intake; // per collector, sum_i q(i, k)
  SolveStats stats;
};

// E_i = sum_{j != i} q(i, j) * E(i, j) for every node. Throws
// Error(kInvalidArgument) on a dimension mismatch.
std::vector<double> SensorEnergies(const FlowMatrix& flow,
                                   const EnergyMatrix& energy);

// h_i = sum_j (q(i, j) - q(j, i)) - Q_i for every sensor, in sensor order.
std::vector<double> ConservationResiduals(const FlowMatrix& flow,
                                          const NetworkInstance& instance);

// Largest |h_i|.
double MaxResidual(const FlowMatrix& flow, const NetworkInstance& instance);

// Feasibility tolerance 1e-9 * (1 + max Q).
double FeasibilityTolerance(const NetworkInstance& instance);

// True when residuals are within FeasibilityTolerance, entries are
// >= -1e-12 and collector rows and the diagonal are zero.
bool IsFeasible(const FlowMatrix& flow, const NetworkInstance& instance);

// Packages an arbitrary flow with its energies, objective and intakes.
Solution Evaluate(const FlowMatrix& flow, const EnergyMatrix& energy,
                  const NetworkInstance& instance);

// Number of q(i, j) decision variables: N * (K + N - 1).
int FlowVariableCount(const NetworkInstance& instance);

// Global optimum of the min-max problem. Throws Error(kInfeasible,
// "infeasible: no sink") when K = 0, Error(kValidation) for an invalid
// instance or energy matrix.
Solution SolveMaxLifetime(const NetworkInstance& instance,
                          const EnergyMatrix& energy);

// floor(e0 / objective); nullopt when the objective is zero (unbounded
// lifetime). Throws Error(kInvalidArgument) for a non-positive or non-finite
// e0.
std::optional<std::int64_t> LifetimeCycles(double e0, const Solution& solution);

}  // namespace symlife

#endif  // SYMLIFE_SOLVER_H_
