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

#include "symlife/simplex.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "symlife/error.h"

namespace symlife {
namespace {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class Tableau {
 public:
  Tableau(const StandardFormLp& lp, std::vector<int> basis)
      : lp_(lp), m_(lp.rows), n_(lp.cols), basis_(std::move(basis)) {
    if (static_cast<int>(basis_.size()) != m_) {
      throw Error(ErrorCode::kInvalidArgument, "basis size does not match rows");
    }
    is_basic_.assign(n_, false);
    for (int j : basis_) {
      if (j < 0 || j >= n_ || is_basic_[j]) {
        throw Error(ErrorCode::kInvalidArgument, "malformed initial basis");
      }
      is_basic_[j] = true;
    }
    Refactor();
  }

  // Rebuilds B^{-1}A, B^{-1}b and the reduced costs from the original data.
  void Refactor() {
    const Eigen::Map<const RowMatrix> a(lp_.a.data(), m_, n_);
    Eigen::MatrixXd basis_matrix(m_, m_);
    for (int r = 0; r < m_; ++r) basis_matrix.col(r) = a.col(basis_[r]);
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (!lu.isInvertible()) {
      throw Error(ErrorCode::kNumerical, "simplex basis became singular");
    }
    t_ = lu.solve(a);
    beta_ = lu.solve(Eigen::Map<const Eigen::VectorXd>(lp_.b.data(), m_));
    Eigen::VectorXd cb(m_);
    for (int r = 0; r < m_; ++r) cb(r) = lp_.c[basis_[r]];
    d_ = Eigen::Map<const Eigen::VectorXd>(lp_.c.data(), n_) -
         t_.transpose() * cb;
    for (int r = 0; r < m_; ++r) {
      t_.col(basis_[r]).setZero();
      t_(r, basis_[r]) = 1.0;
      d_(basis_[r]) = 0.0;
    }
  }

  // Dantzig (most negative reduced cost) or Bland (first negative); -1 when
  // the basis is optimal.
  int ChooseEntering(bool bland, double tol) const {
    int best = -1;
    double best_d = -tol;
    for (int j = 0; j < n_; ++j) {
      if (is_basic_[j] || !(d_(j) < -tol)) continue;
      if (bland) return j;
      if (d_(j) < best_d) {
        best = j;
        best_d = d_(j);
      }
    }
    return best;
  }

  // Minimum-ratio row; ties go to the smallest basic column index. -1 when
  // the column is unbounded.
  int ChooseLeaving(int col, double pivot_tol, double* step) const {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m_; ++r) {
      const double coef = t_(r, col);
      if (coef <= pivot_tol) continue;
      const double ratio = std::max(beta_(r), 0.0) / coef;
      const double slack = 1e-12 * (1.0 + std::abs(best_ratio));
      if (best < 0 || ratio < best_ratio - slack) {
        best = r;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + slack && basis_[r] < basis_[best]) {
        best = r;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    *step = best_ratio;
    return best;
  }

  void Pivot(int row, int col) {
    const double p = t_(row, col);
    t_.row(row) /= p;
    beta_(row) /= p;
    t_(row, col) = 1.0;
    for (int r = 0; r < m_; ++r) {
      if (r == row) continue;
      const double f = t_(r, col);
      if (f == 0.0) continue;
      t_.row(r) -= f * t_.row(row);
      beta_(r) -= f * beta_(row);
      t_(r, col) = 0.0;
    }
    const double f = d_(col);
    d_ -= f * t_.row(row).transpose();
    d_(col) = 0.0;
    is_basic_[basis_[row]] = false;
    is_basic_[col] = true;
    basis_[row] = col;
  }

  std::vector<double> Primal() const {
    std::vector<double> x(n_, 0.0);
    for (int r = 0; r < m_; ++r) x[basis_[r]] = std::max(beta_(r), 0.0);
    return x;
  }

  const std::vector<int>& basis() const { return basis_; }

 private:
  const StandardFormLp& lp_;
  int m_;
  int n_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  RowMatrix t_;
  Eigen::VectorXd beta_;
  Eigen::VectorXd d_;
};

}  // namespace

SimplexResult SolveStandardForm(const StandardFormLp& lp,
                                std::vector<int> initial_basis,
                                const SimplexOptions& options) {
  if (lp.rows < 1 || lp.cols < lp.rows ||
      lp.a.size() != static_cast<std::size_t>(lp.rows) * lp.cols ||
      lp.b.size() != static_cast<std::size_t>(lp.rows) ||
      lp.c.size() != static_cast<std::size_t>(lp.cols)) {
    throw Error(ErrorCode::kInvalidArgument, "malformed standard-form program");
  }
  Tableau tableau(lp, std::move(initial_basis));

  SimplexResult result;
  int since_refactor = 0;
  int degenerate_streak = 0;
  bool bland = false;
  while (true) {
    const int col = tableau.ChooseEntering(bland, options.optimality_tolerance);
    if (col < 0) {
      if (since_refactor == 0) break;
      tableau.Refactor();
      since_refactor = 0;
      continue;
    }
    double step = 0.0;
    const int row = tableau.ChooseLeaving(col, options.pivot_tolerance, &step);
    if (row < 0) {
      throw Error(ErrorCode::kNumerical, "linear program is unbounded");
    }
    if (step <= 1e-14) {
      if (++degenerate_streak > options.degenerate_streak_before_bland) {
        bland = true;
      }
    } else {
      degenerate_streak = 0;
      bland = false;
    }
    tableau.Pivot(row, col);
    ++result.iterations;
    if (result.iterations > options.max_iterations) {
      throw Error(ErrorCode::kNumerical,
                  "simplex exceeded " + std::to_string(options.max_iterations) +
                      " iterations");
    }
    if (++since_refactor >= options.refactor_interval) {
      tableau.Refactor();
      since_refactor = 0;
    }
  }

  result.x = tableau.Primal();
  result.basis = tableau.basis();
  for (int j = 0; j < lp.cols; ++j) result.objective += lp.c[j] * result.x[j];
  return result;
}

}  // namespace symlife
