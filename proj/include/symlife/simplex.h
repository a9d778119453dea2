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

// Dense primal simplex for standard-form programs
//
//   minimize c.x  subject to  A x = b,  x >= 0,
//
// started from a caller-supplied primal feasible basis. Pricing is Dantzig's
// rule with smallest-index tie-breaking; after a run of degenerate pivots it
// falls back to Bland's smallest-index rule until the objective moves again,
// which rules out cycling. The tableau is rebuilt from an LU factorization of
// the basis matrix periodically and before optimality is declared.
//
// Results depend only on the input bytes: there is no randomization and no
// threading.

#ifndef SYMLIFE_SIMPLEX_H_
#define SYMLIFE_SIMPLEX_H_

#include <vector>

namespace symlife {

struct StandardFormLp {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // row-major, rows x cols
  std::vector<double> b;  // size rows, b >= 0
  std::vector<double> c;  // size cols

  double& At(int r, int j) { return a[static_cast<std::size_t>(r) * cols + j]; }
  double At(int r, int j) const {
    return a[static_cast<std::size_t>(r) * cols + j];
  }
};

struct SimplexOptions {
  double pivot_tolerance = 1e-10;
  double optimality_tolerance = 1e-11;
  int refactor_interval = 100;
  int degenerate_streak_before_bland = 50;
  int max_iterations = 200000;
};

struct SimplexResult {
  std::vector<double> x;
  std::vector<int> basis;
  double objective = 0.0;
  int iterations = 0;
};

// `initial_basis[r]` is the column basic in row r; the corresponding basic
// solution must be feasible. Throws Error(kNumerical) on a singular basis,
// unboundedness or iteration exhaustion.
SimplexResult SolveStandardForm(const StandardFormLp& lp,
                                std::vector<int> initial_basis,
                                const SimplexOptions& options = {});

}  // namespace symlife

#endif  // SYMLIFE_SIMPLEX_H_
