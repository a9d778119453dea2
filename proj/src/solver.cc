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

#include "symlife/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "symlife/error.h"
#include "symlife/simplex.h"

namespace symlife {

std::vector<double> SensorEnergies(const FlowMatrix& flow,
                                   const EnergyMatrix& energy) {
  if (flow.size() != energy.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "flow and energy matrix dimensions differ");
  }
  const int n = flow.size();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double e = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) e += flow(i, j) * energy(i, j);
    }
    out[i] = e;
  }
  return out;
}

std::vector<double> ConservationResiduals(const FlowMatrix& flow,
                                          const NetworkInstance& instance) {
  const int n = instance.num_nodes();
  const int k = instance.num_collectors();
  if (flow.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "flow matrix dimension does not match instance");
  }
  std::vector<double> out;
  out.reserve(instance.num_sensors());
  for (int i = k; i < n; ++i) {
    double h = 0.0;
    for (int j = 0; j < n; ++j) h += flow(i, j) - flow(j, i);
    out.push_back(h - instance.Data(i));
  }
  return out;
}

double MaxResidual(const FlowMatrix& flow, const NetworkInstance& instance) {
  double worst = 0.0;
  for (double h : ConservationResiduals(flow, instance)) {
    worst = std::max(worst, std::abs(h));
  }
  return worst;
}

double FeasibilityTolerance(const NetworkInstance& instance) {
  double qmax = 0.0;
  for (double q : instance.data) qmax = std::max(qmax, std::abs(q));
  return 1e-9 * (1.0 + qmax);
}

bool IsFeasible(const FlowMatrix& flow, const NetworkInstance& instance) {
  const int n = instance.num_nodes();
  if (flow.size() != n) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = flow(i, j);
      if (!std::isfinite(v) || v < -1e-12) return false;
      if ((i == j || instance.IsCollector(i)) && v != 0.0) return false;
    }
  }
  return MaxResidual(flow, instance) <= FeasibilityTolerance(instance);
}

Solution Evaluate(const FlowMatrix& flow, const EnergyMatrix& energy,
                  const NetworkInstance& instance) {
  Solution s;
  s.flow = flow;
  s.sensor_energies = SensorEnergies(flow, energy);
  const int k = instance.num_collectors();
  for (int i = k; i < instance.num_nodes(); ++i) {
    s.objective = std::max(s.objective, s.sensor_energies[i]);
  }
  s.collector_intake.assign(k, 0.0);
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i < instance.num_nodes(); ++i) {
      s.collector_intake[c] += flow(i, c);
    }
  }
  s.stats.flow_variables = FlowVariableCount(instance);
  return s;
}

int FlowVariableCount(const NetworkInstance& instance) {
  return instance.num_sensors() * (instance.num_nodes() - 1);
}

namespace {

void CheckEnergyMatrix(const EnergyMatrix& energy, int n) {
  if (energy.size() != n) {
    throw Error(ErrorCode::kValidation,
                "energy matrix is " + std::to_string(energy.size()) + "x" +
                    std::to_string(energy.size()) + " for " +
                    std::to_string(n) + " nodes");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double e = energy(i, j);
      if (!std::isfinite(e) || e < 0.0) {
        throw Error(ErrorCode::kValidation,
                    "energy matrix entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") is negative or non-finite");
      }
    }
  }
}

// Column layout: q(i, j) for sensors i in order and j != i ascending, then t,
// then one slack per sensor energy row. Rows: N energy rows (scaled by the
// row's largest cost), then N conservation rows.
struct ProgramLayout {
  int k = 0;
  int n = 0;
  int sensors = 0;
  int flow_cols = 0;
  std::vector<std::pair<int, int>> flow_edge;  // column -> (i, j)

  int FlowColumn(int i, int j) const {
    const int s = i - k;
    return s * (n - 1) + (j < i ? j : j - 1);
  }
  int TColumn() const { return flow_cols; }
  int SlackColumn(int s) const { return flow_cols + 1 + s; }
  int EnergyRow(int s) const { return s; }
  int ConservationRow(int s) const { return sensors + s; }
};

}  // namespace

Solution SolveMaxLifetime(const NetworkInstance& instance,
                          const EnergyMatrix& energy) {
  if (instance.collectors.empty()) {
    throw Error(ErrorCode::kInfeasible, "infeasible: no sink");
  }
  RequireValid(instance);
  const int n = instance.num_nodes();
  CheckEnergyMatrix(energy, n);

  ProgramLayout layout;
  layout.k = instance.num_collectors();
  layout.n = n;
  layout.sensors = instance.num_sensors();
  layout.flow_cols = FlowVariableCount(instance);
  for (int i = layout.k; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) layout.flow_edge.emplace_back(i, j);
    }
  }

  StandardFormLp lp;
  lp.rows = 2 * layout.sensors;
  lp.cols = layout.flow_cols + 1 + layout.sensors;
  lp.a.assign(static_cast<std::size_t>(lp.rows) * lp.cols, 0.0);
  lp.b.assign(lp.rows, 0.0);
  lp.c.assign(lp.cols, 0.0);
  lp.c[layout.TColumn()] = 1.0;

  for (int s = 0; s < layout.sensors; ++s) {
    const int i = layout.k + s;
    double scale = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) scale = std::max(scale, energy(i, j));
    }
    if (scale <= 0.0) scale = 1.0;
    const int er = layout.EnergyRow(s);
    const int cr = layout.ConservationRow(s);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const int col = layout.FlowColumn(i, j);
      lp.At(er, col) = energy(i, j) / scale;
      lp.At(cr, col) += 1.0;
      if (!instance.IsCollector(j)) {
        lp.At(layout.ConservationRow(j - layout.k), col) -= 1.0;
      }
    }
    lp.At(er, layout.TColumn()) = -1.0 / scale;
    lp.At(er, layout.SlackColumn(s)) = 1.0;
    lp.b[cr] = instance.Data(i);
  }

  // Feasible start: every sensor sends everything to its cheapest collector;
  // t is basic in the energy row of the most loaded sensor.
  std::vector<int> basis(lp.rows);
  int loaded = 0;
  double load = -1.0;
  for (int s = 0; s < layout.sensors; ++s) {
    const int i = layout.k + s;
    int best = 0;
    for (int c = 1; c < layout.k; ++c) {
      if (energy(i, c) < energy(i, best)) best = c;
    }
    basis[layout.ConservationRow(s)] = layout.FlowColumn(i, best);
    const double e = energy(i, best) * instance.Data(i);
    if (e > load) {
      load = e;
      loaded = s;
    }
  }
  for (int s = 0; s < layout.sensors; ++s) {
    basis[layout.EnergyRow(s)] =
        s == loaded ? layout.TColumn() : layout.SlackColumn(s);
  }

  const SimplexResult lp_result = SolveStandardForm(lp, std::move(basis));

  FlowMatrix flow(n);
  for (int col = 0; col < layout.flow_cols; ++col) {
    const auto [i, j] = layout.flow_edge[col];
    flow(i, j) = lp_result.x[col];
  }
  Solution solution = Evaluate(flow, energy, instance);
  solution.stats.rows = lp.rows;
  solution.stats.iterations = lp_result.iterations;
  if (MaxResidual(flow, instance) > FeasibilityTolerance(instance)) {
    throw Error(ErrorCode::kNumerical,
                "solver lost feasibility: residual " +
                    std::to_string(MaxResidual(flow, instance)));
  }
  return solution;
}

std::optional<std::int64_t> LifetimeCycles(double e0, const Solution& solution) {
  if (!std::isfinite(e0) || e0 <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "initial energy must be positive and finite");
  }
  if (solution.objective < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "negative objective");
  }
  if (solution.objective == 0.0) return std::nullopt;
  const double cycles = std::floor(e0 / solution.objective);
  if (cycles >= static_cast<double>(std::numeric_limits<std::int64_t>::max())) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(cycles);
}

}  // namespace symlife
