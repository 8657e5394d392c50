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

#ifndef FELLER_FM_HPP_
#define FELLER_FM_HPP_

// Fortet-Mourier norm of a finitely supported signed measure:
//   sup { |<f, mu>| : 0 <= f <= 1, f is 1-Lipschitz for the space metric }.
// On a finite support this is a linear program over the f values at the
// support points, solved here by the in-repo dense simplex (both signs of
// the objective; the norm is the larger optimum). A grid-search oracle,
// independent of the simplex, gives a lower bound within n*step.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "feller/measure.hpp"
#include "feller/rational.hpp"
#include "feller/simplex.hpp"
#include "feller/space.hpp"

namespace feller {

struct FmOptions {
  // The LP is dense; instances are capped rather than optimized.
  std::size_t support_cap = 50;
  double tol = 1e-9;
};

struct FmResult {
  double value = 0.0;
  std::vector<Rational> support;  // sorted support points
  std::vector<double> witness;    // optimal f at the support points
  int sign = +1;                  // +1: <f,mu> attains the norm; -1: <f,-mu>
};

namespace internal {

inline std::vector<std::vector<double>> distance_matrix(const std::vector<Rational>& pts,
                                                        const MetricSpace& space) {
  const std::size_t n = pts.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = space.distance(pts[i], pts[j]);
    }
  }
  return d;
}

inline LpResult fm_lp(const std::vector<double>& objective,
                      const std::vector<std::vector<double>>& d) {
  const std::size_t n = objective.size();
  DenseSimplex lp(n);
  lp.set_objective(objective);
  for (std::size_t i = 0; i < n; ++i) {
    lp.add_constraint({{i, 1.0}}, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
      // f_i - f_j <= d_ij. Rows with d_ij >= 1 are implied by the [0,1]
      // box and are skipped.
      if (i != j && d[i][j] < 1.0) {
        lp.add_constraint({{i, 1.0}, {j, -1.0}}, d[i][j]);
      }
    }
  }
  return lp.maximize();
}

}  // namespace internal

inline FmResult fm_norm(const DiscreteMeasure& mu, const MetricSpace& space,
                        const FmOptions& options = {}) {
  if (mu.space() != space.kind()) {
    throw std::invalid_argument("measure space does not match the metric space");
  }
  FmResult out;
  const std::size_t n = mu.size();
  if (n == 0) return out;
  if (n > options.support_cap) {
    throw std::runtime_error("fm_norm support of " + std::to_string(n) +
                             " exceeds the cap of " + std::to_string(options.support_cap));
  }
  std::vector<double> w(n);
  out.support.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.support.push_back(mu.entries()[i].first);
    w[i] = mu.entries()[i].second.get_d();
  }
  const auto d = internal::distance_matrix(out.support, space);

  LpResult plus = internal::fm_lp(w, d);
  std::vector<double> neg(n);
  for (std::size_t i = 0; i < n; ++i) neg[i] = -w[i];
  LpResult minus = internal::fm_lp(neg, d);

  if (plus.value >= minus.value) {
    out.value = plus.value;
    out.witness = std::move(plus.x);
    out.sign = +1;
  } else {
    out.value = minus.value;
    out.witness = std::move(minus.x);
    out.sign = -1;
  }
  return out;
}

inline double fm_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                          const MetricSpace& space, const FmOptions& options = {}) {
  return fm_norm(combine(Rational(1), mu, Rational(-1), nu), space, options).value;
}

namespace internal {

// Maximum of wa*fa + wb*fb over integers fa in [la,ua], fb in [lb,ub] with
// |fa - fb| <= band. The profile in fa (with fb chosen optimally) is
// piecewise linear with one integer breakpoint, so checking the interval
// ends and the breakpoint is exhaustive. Returns false when infeasible.
inline bool collapse_pair(double wa, double wb, long la, long ua, long lb, long ub, long band,
                          double& best) {
  la = std::max(la, lb - band);
  ua = std::min(ua, ub + band);
  if (la > ua || lb > ub) return false;
  const long breakpoint = wb >= 0 ? ub - band : lb + band;
  long candidates[3] = {la, ua, std::min(std::max(breakpoint, la), ua)};
  bool any = false;
  for (long fa : candidates) {
    const long fb = wb >= 0 ? std::min(ub, fa + band) : std::max(lb, fa - band);
    const double value = wa * static_cast<double>(fa) + wb * static_cast<double>(fb);
    if (!any || value > best) {
      best = value;
      any = true;
    }
  }
  return true;
}

// Maximum of sum(w_i * f_i) over the integer grid {0..m}^n with bands
// |f_i - f_j| <= band[i][j]. Exhaustive over the first n-2 variables; the
// final pair is collapsed exactly, so the result equals full enumeration.
inline double grid_max(const std::vector<double>& w,
                       const std::vector<std::vector<long>>& band, long m) {
  const std::size_t n = w.size();
  double best = 0.0;  // f = 0 is always feasible
  auto relax = [&](double v) {
    if (v > best) best = v;
  };
  if (n == 1) {
    relax(w[0] >= 0 ? w[0] * static_cast<double>(m) : 0.0);
  } else if (n == 2) {
    double v = 0.0;
    if (collapse_pair(w[0], w[1], 0, m, 0, m, band[0][1], v)) relax(v);
  } else if (n == 3) {
    for (long f0 = 0; f0 <= m; ++f0) {
      const long l1 = std::max(0L, f0 - band[0][1]), u1 = std::min(m, f0 + band[0][1]);
      const long l2 = std::max(0L, f0 - band[0][2]), u2 = std::min(m, f0 + band[0][2]);
      double v = 0.0;
      if (collapse_pair(w[1], w[2], l1, u1, l2, u2, band[1][2], v)) {
        relax(w[0] * static_cast<double>(f0) + v);
      }
    }
  } else if (n == 4) {
    for (long f0 = 0; f0 <= m; ++f0) {
      const long l1 = std::max(0L, f0 - band[0][1]), u1 = std::min(m, f0 + band[0][1]);
      for (long f1 = l1; f1 <= u1; ++f1) {
        const long l2 = std::max({0L, f0 - band[0][2], f1 - band[1][2]});
        const long u2 = std::min({m, f0 + band[0][2], f1 + band[1][2]});
        const long l3 = std::max({0L, f0 - band[0][3], f1 - band[1][3]});
        const long u3 = std::min({m, f0 + band[0][3], f1 + band[1][3]});
        double v = 0.0;
        if (collapse_pair(w[2], w[3], l2, u2, l3, u3, band[2][3], v)) {
          relax(w[0] * static_cast<double>(f0) + w[1] * static_cast<double>(f1) + v);
        }
      }
    }
  } else {
    throw std::invalid_argument("grid oracle supports at most 4 points");
  }
  return best;
}

}  // namespace internal

// Grid-search evaluation of the same supremum: f values restricted to
// {0, step, ..., 1}. A lower bound of the true norm, within n*step of it.
// Distances are rounded down to whole grid steps first, which leaves the
// grid-feasible set unchanged because grid differences are grid multiples.
inline double fm_norm_oracle(const DiscreteMeasure& mu, const MetricSpace& space,
                             double step) {
  if (mu.space() != space.kind()) {
    throw std::invalid_argument("measure space does not match the metric space");
  }
  if (!(step > 0.0) || step > 0.1) {
    throw std::invalid_argument("oracle step must lie in (0, 0.1]");
  }
  const std::size_t n = mu.size();
  if (n == 0) return 0.0;
  if (n > 4) throw std::invalid_argument("grid oracle supports at most 4 points");

  const long m = static_cast<long>(std::floor(1.0 / step + 1e-9));
  std::vector<Rational> pts;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(mu.entries()[i].first);
    w[i] = mu.entries()[i].second.get_d() * step;  // objective per grid unit
  }
  const auto d = internal::distance_matrix(pts, space);
  std::vector<std::vector<long>> band(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) band[i][j] = static_cast<long>(std::floor(d[i][j] / step + 1e-9));
    }
  }
  std::vector<double> neg(n);
  for (std::size_t i = 0; i < n; ++i) neg[i] = -w[i];
  return std::max(internal::grid_max(w, band, m), internal::grid_max(neg, band, m));
}

}  // namespace feller

#endif  // FELLER_FM_HPP_
