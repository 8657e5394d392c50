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

#ifndef FELLER_KERNEL_HPP_
#define FELLER_KERNEL_HPP_

// Transition kernels and their action on measures and fields. A kernel row
// is the exact probability measure the point moves to in one step. The
// forward action on measures is the primary route; the recursive dual route
// is kept as an independent cross-check oracle.

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "feller/measure.hpp"
#include "feller/rational.hpp"
#include "feller/space.hpp"

namespace feller {

inline constexpr std::size_t kDefaultSupportCap = 100000;

struct TransitionKernel {
  std::string label;
  SpaceKind space = SpaceKind::kRealLine;
  std::function<DiscreteMeasure(const Rational&)> row;
};

namespace internal {
inline DiscreteMeasure checked_row(const TransitionKernel& k, const Rational& x) {
  DiscreteMeasure row = k.row(x);
  if (row.space() != k.space) {
    throw std::runtime_error("kernel '" + k.label + "' produced a row on the wrong space");
  }
  if (!row.is_probability()) {
    throw std::runtime_error("kernel '" + k.label + "' produced a non-probability row at " +
                             format_rational(x));
  }
  return row;
}
}  // namespace internal

// One forward step: mu -> sum_i w_i * row(x_i), coalesced exactly. Works for
// signed mu as well; mass is conserved exactly because rows are exact
// probability measures. Throws std::runtime_error past the support cap.
inline DiscreteMeasure apply(const TransitionKernel& k, const DiscreteMeasure& mu,
                             std::size_t support_cap = kDefaultSupportCap) {
  if (mu.space() != k.space) {
    throw std::invalid_argument("measure space does not match kernel space");
  }
  std::map<Rational, Rational> acc;
  for (const auto& [point, weight] : mu.entries()) {
    const DiscreteMeasure row = internal::checked_row(k, point);
    for (const auto& [target, mass] : row.entries()) {
      acc[target] += weight * mass;
      if (acc.size() > support_cap) {
        throw std::runtime_error("support cap of " + std::to_string(support_cap) +
                                 " points exceeded");
      }
    }
  }
  std::vector<DiscreteMeasure::Entry> entries(acc.begin(), acc.end());
  return DiscreteMeasure(k.space, std::move(entries));
}

// n forward steps; n = 0 returns mu unchanged.
inline DiscreteMeasure iterate(const TransitionKernel& k, DiscreteMeasure mu, long n,
                               std::size_t support_cap = kDefaultSupportCap) {
  if (n < 0) throw std::invalid_argument("iteration count must be >= 0");
  for (long i = 0; i < n; ++i) mu = apply(k, mu, support_cap);
  return mu;
}

// Dual action on a field at one point: (Uf)(x) = <f, row(x)>.
inline double dual(const TransitionKernel& k, const ScalarField& f, const Rational& x) {
  return integrate(f, internal::checked_row(k, x));
}

// (U^n f)(x) through the measure route: <f, P^n delta_x>.
inline double dual_power(const TransitionKernel& k, const ScalarField& f, const Rational& x,
                         long n, std::size_t support_cap = kDefaultSupportCap) {
  return integrate(f, iterate(k, DiscreteMeasure::delta(k.space, x), n, support_cap));
}

// Exact variant for fields with a rational evaluator.
inline Rational dual_power_exact(const TransitionKernel& k, const ScalarField& f,
                                 const Rational& x, long n,
                                 std::size_t support_cap = kDefaultSupportCap) {
  return integrate_exact(f, iterate(k, DiscreteMeasure::delta(k.space, x), n, support_cap));
}

// Independent recursive route, memoized on (n, point):
// (U^n f)(x) = sum over row(x) of w * (U^{n-1} f)(p). Used as an oracle
// against dual_power; keep both routes separate.
inline double dual_power_recursive(const TransitionKernel& k, const ScalarField& f,
                                   const Rational& x, long n,
                                   std::map<std::pair<long, Rational>, double>& memo) {
  if (n < 0) throw std::invalid_argument("iteration count must be >= 0");
  if (n == 0) {
    const double v = f.eval(x);
    internal::check_bound(f, x, v);
    return v;
  }
  const auto key = std::make_pair(n, x);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  double sum = 0.0;
  const DiscreteMeasure row = internal::checked_row(k, x);
  for (const auto& [target, mass] : row.entries()) {
    sum += mass.get_d() * dual_power_recursive(k, f, target, n - 1, memo);
  }
  memo.emplace(key, sum);
  return sum;
}

inline double dual_power_recursive(const TransitionKernel& k, const ScalarField& f,
                                   const Rational& x, long n) {
  std::map<std::pair<long, Rational>, double> memo;
  return dual_power_recursive(k, f, x, n, memo);
}

}  // namespace feller

#endif  // FELLER_KERNEL_HPP_
