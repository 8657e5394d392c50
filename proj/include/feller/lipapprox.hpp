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

#ifndef FELLER_LIPAPPROX_HPP_
#define FELLER_LIPAPPROX_HPP_

// Approximation of a bounded uniformly continuous function by a Lipschitz
// blend over a finite cover. Centers x_1..x_N cover a grid at radius r/2;
// the blend weights fall off at scale 1/l beyond r/2 and are floored by a
// mixing constant c, which makes every weight positive and the blend
// Lipschitz. The approximation error against f is at most
//   delta + 2*fbound*(N-1)*(1/(l*r/2 + 1) + c/N)
// where delta bounds the oscillation of f at scale r. The blend never
// exceeds the bound of f, since its value is a convex combination of center
// values.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "feller/measure.hpp"
#include "feller/rational.hpp"
#include "feller/space.hpp"

namespace feller {

struct CoverSpec {
  std::vector<Rational> centers;
  double r = 0.0;       // cover scale; every grid point is within r/2 of a center
  double c = 0.0;       // mixing floor, > 0
  double l = 0.0;       // falloff sharpness, > 0
  std::vector<double> fvals;  // f at the centers
  double fbound = 0.0;  // sup |f| over the grid
  double delta = 0.0;   // oscillation of f at scale r over the grid
};

// Blend weights at x: positive, summing to one. Center i gets
// d_i = 1/(max(l*(rho(x, x_i) - r/2), 0) + 1), then the floor c/N is mixed
// in and the total is normalized.
inline std::vector<double> partition_weights(const CoverSpec& spec, const Rational& x,
                                             const MetricSpace& space) {
  const std::size_t n = spec.centers.size();
  if (n == 0) throw std::invalid_argument("cover has no centers");
  if (!(spec.c > 0) || !(spec.l > 0) || !(spec.r > 0)) {
    throw std::invalid_argument("cover parameters r, c, l must be positive");
  }
  std::vector<double> d(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double excess = spec.l * (space.distance(x, spec.centers[i]) - spec.r / 2.0);
    d[i] = 1.0 / (std::max(excess, 0.0) + 1.0);
    total += d[i];
  }
  const double denom = total + spec.c;
  const double floor_share = spec.c / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (d[i] + floor_share) / denom;
  return d;
}

inline double lip_eval(const CoverSpec& spec, const Rational& x, const MetricSpace& space) {
  if (spec.fvals.size() != spec.centers.size()) {
    throw std::invalid_argument("cover has " + std::to_string(spec.centers.size()) +
                                " centers but " + std::to_string(spec.fvals.size()) +
                                " field values");
  }
  const std::vector<double> p = partition_weights(spec, x, space);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * spec.fvals[i];
  return sum;
}

inline double error_bound(double delta, double fbound, std::size_t n, double r, double c,
                          double l) {
  if (n == 0) throw std::invalid_argument("cover has no centers");
  return delta + 2.0 * fbound * static_cast<double>(n - 1) *
                     (1.0 / (l * r / 2.0 + 1.0) + c / static_cast<double>(n));
}

// Picks (c, l) so the bound above is at most delta + (epsilon - delta)/2,
// hence below epsilon: each bracket term is pushed to
// (epsilon - delta) / (8 * fbound * (n-1)). Requires delta < epsilon; with
// one center or a zero bound any positive parameters work.
inline std::pair<double, double> choose_parameters(double delta, double fbound,
                                                   std::size_t n, double r, double epsilon) {
  if (n == 0) throw std::invalid_argument("cover has no centers");
  if (!(r > 0)) throw std::invalid_argument("cover scale r must be positive");
  if (!(delta < epsilon)) {
    throw std::invalid_argument("cannot hit tolerance " + std::to_string(epsilon) +
                                ": oscillation at the cover scale is already " +
                                std::to_string(delta));
  }
  if (n == 1 || fbound == 0.0) return {1.0, 1.0};
  const double target = (epsilon - delta) / (8.0 * fbound * static_cast<double>(n - 1));
  const double l = target >= 1.0 ? 1.0 : (1.0 / target - 1.0) * 2.0 / r;
  const double c = static_cast<double>(n) * target;
  return {c, l};
}

// Greedy farthest-point cover of the grid: keep adding the point farthest
// from the chosen centers until everything is within r/2. Deterministic;
// starts from the first grid point.
inline std::vector<Rational> build_cover(const std::vector<Rational>& grid, double r,
                                         const MetricSpace& space) {
  if (grid.empty()) throw std::invalid_argument("cannot cover an empty grid");
  if (!(r > 0)) throw std::invalid_argument("cover scale r must be positive");
  std::vector<Rational> centers{grid[0]};
  std::vector<double> nearest(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) nearest[i] = space.distance(grid[i], grid[0]);
  while (true) {
    std::size_t far = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (nearest[i] > nearest[far]) far = i;
    }
    if (nearest[far] <= r / 2.0) break;
    centers.push_back(grid[far]);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      nearest[i] = std::min(nearest[i], space.distance(grid[i], grid[far]));
    }
  }
  return centers;
}

// Largest |f(u) - f(v)| over grid pairs at distance <= r: the grid proxy
// for the oscillation of f at scale r.
inline double oscillation_at_scale(const std::vector<Rational>& grid,
                                   const std::vector<double>& fvals, double r,
                                   const MetricSpace& space) {
  if (grid.size() != fvals.size()) {
    throw std::invalid_argument("grid and field value counts differ");
  }
  double osc = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      if (space.distance(grid[i], grid[j]) <= r) {
        osc = std::max(osc, std::fabs(fvals[i] - fvals[j]));
      }
    }
  }
  return osc;
}

// Full pipeline: cover the grid at r, measure fbound and the scale-r
// oscillation of f on the grid, then pick (c, l) for the tolerance.
// Throws std::invalid_argument when the measured oscillation already
// exceeds epsilon, because no parameter choice can certify the tolerance.
inline CoverSpec make_cover_spec(const std::vector<Rational>& grid, const ScalarField& f,
                                 double r, double epsilon, const MetricSpace& space) {
  CoverSpec spec;
  spec.r = r;
  spec.centers = build_cover(grid, r, space);
  std::vector<double> grid_vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) grid_vals[i] = f.eval(grid[i]);
  spec.fvals.reserve(spec.centers.size());
  for (const Rational& center : spec.centers) spec.fvals.push_back(f.eval(center));
  spec.fbound = 0.0;
  for (double v : grid_vals) spec.fbound = std::max(spec.fbound, std::fabs(v));
  spec.delta = oscillation_at_scale(grid, grid_vals, r, space);
  const auto [c, l] = choose_parameters(spec.delta, spec.fbound, spec.centers.size(), r, epsilon);
  spec.c = c;
  spec.l = l;
  return spec;
}

}  // namespace feller

#endif  // FELLER_LIPAPPROX_HPP_
