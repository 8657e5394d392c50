// Copyright 2026 The Feller Lab Authors.
//
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

#ifndef FELLER_SIMPLEX_HPP_
#define FELLER_SIMPLEX_HPP_

// Dense primal simplex for problems of the form
//   maximize c.x  subject to  A x <= b,  x >= 0,  b >= 0.
// Since b >= 0 the slack basis is feasible and no phase-one is needed.
// Dantzig pricing with a switch to Bland's rule after a fixed number of
// iterations guarantees termination on degenerate problems. Intended for
// the small dense instances produced in this repo (hundreds of rows);
// nothing here is sparse or revised.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace feller {

struct LpResult {
  double value = 0.0;
  std::vector<double> x;  // structural variables only
  long iterations = 0;
};

class DenseSimplex {
 public:
  explicit DenseSimplex(std::size_t num_vars) : n_(num_vars), objective_(num_vars, 0.0) {}

  void set_objective(std::vector<double> c) {
    if (c.size() != n_) throw std::invalid_argument("objective size mismatch");
    objective_ = std::move(c);
  }

  // Adds sum(coef_j * x_j) <= rhs with rhs >= 0.
  void add_constraint(const std::vector<std::pair<std::size_t, double>>& terms, double rhs) {
    if (rhs < 0) throw std::invalid_argument("simplex requires nonnegative right-hand sides");
    std::vector<double> row(n_, 0.0);
    for (const auto& [j, coef] : terms) {
      if (j >= n_) throw std::invalid_argument("constraint index out of range");
      row[j] += coef;
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
  }

  LpResult maximize() const {
    const std::size_t m = rows_.size();
    const std::size_t cols = n_ + m;
    // Tableau rows hold structural plus slack columns; rhs kept separately.
    std::vector<std::vector<double>> t(m, std::vector<double>(cols, 0.0));
    std::vector<double> rhs = rhs_;
    std::vector<double> cbar(cols, 0.0);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t[i][j] = rows_[i][j];
      t[i][n_ + i] = 1.0;
      basis[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) cbar[j] = objective_[j];

    const double tol = 1e-9;
    double value = 0.0;
    long iter = 0;
    const long bland_after = 200 + 20 * static_cast<long>(cols);
    const long hard_cap = 1000000;
    while (true) {
      if (++iter > hard_cap) throw std::runtime_error("simplex iteration cap exceeded");
      // Entering column.
      std::size_t enter = cols;
      if (iter <= bland_after) {
        double best = tol;
        for (std::size_t j = 0; j < cols; ++j) {
          if (cbar[j] > best) {
            best = cbar[j];
            enter = j;
          }
        }
      } else {
        for (std::size_t j = 0; j < cols; ++j) {
          if (cbar[j] > tol) {
            enter = j;
            break;
          }
        }
      }
      if (enter == cols) break;  // optimal

      // Ratio test; Bland phase breaks ties on the smallest basis index.
      std::size_t leave = m;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] > tol) {
          const double ratio = rhs[i] / t[i][enter];
          if (leave == m || ratio < best_ratio - 1e-15 ||
              (ratio < best_ratio + 1e-15 && basis[i] < basis[leave])) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave == m) throw std::runtime_error("LP is unbounded");

      // Pivot on (leave, enter).
      const double piv = t[leave][enter];
      for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
      rhs[leave] /= piv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == leave) continue;
        const double factor = t[i][enter];
        if (factor == 0.0) continue;
        for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
        rhs[i] -= factor * rhs[leave];
        if (rhs[i] < 0 && rhs[i] > -1e-12) rhs[i] = 0.0;
      }
      const double cfactor = cbar[enter];
      for (std::size_t j = 0; j < cols; ++j) cbar[j] -= cfactor * t[leave][j];
      value += cfactor * rhs[leave];
      basis[leave] = enter;
    }

    LpResult out;
    out.value = value;
    out.iterations = iter;
    out.x.assign(n_, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n_) out.x[basis[i]] = rhs[i];
    }
    return out;
  }

  std::size_t num_rows() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<double> objective_;
  std::vector<std::vector<double>> rows_;
  std::vector<double> rhs_;
};

}  // namespace feller

#endif  // FELLER_SIMPLEX_HPP_
