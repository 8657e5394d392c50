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

#ifndef FELLER_EXAMPLES_HPP_
#define FELLER_EXAMPLES_HPP_

// The built-in kernels the laboratory ships with, plus their closed forms.
//
// doubling_reset_kernel: on the circle, a point in [0, 1/2) doubles; a
// point in [1/2, 1) doubles modulo one but with probability 1/2 resets to
// 0. Tracking binary digits gives the closed form for iterated deltas: the
// reset mass after k steps is determined by the number of ones among the
// first k digits.
//
// svc_interval_kernel: on [-2,-1] union [0,1], the left branch jumps along
// the fat-Cantor parabola map into [0,1]; the right branch doubles on
// [0, 1/2) and on [1/2, 1] splits between the endpoints 0 and 1 with
// weights (2x-1, 2-2x). The point 0 is absorbing.
//
// translation_bump_field: bump profiles against the unit translation on
// the real line; each bump at offset n has height exactly 1 and support
// width 2/(n+2).

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "feller/kernel.hpp"
#include "feller/measure.hpp"
#include "feller/rational.hpp"
#include "feller/space.hpp"
#include "feller/svc.hpp"

namespace feller {

inline TransitionKernel doubling_reset_kernel() {
  TransitionKernel k;
  k.label = "doubling-reset";
  k.space = SpaceKind::kCircle;
  k.row = [](const Rational& x) {
    const UnitRational point(x);  // validates [0,1)
    const Rational half = make_rational(1, 2);
    if (x < half) {
      return DiscreteMeasure::delta(SpaceKind::kCircle, Rational(2 * x));
    }
    // The boundary 1/2 takes this branch; 2x-1 = 0 coalesces with the
    // reset target.
    return DiscreteMeasure(SpaceKind::kCircle,
                           {{Rational(0), half}, {Rational(2 * x - 1), half}});
  };
  return k;
}

// Closed form for k forward steps from a delta at x: with (ones, tail) the
// digit statistics of the first k binary digits of x,
//   P^k delta_x = (1 - 2^{-ones}) delta_0 + 2^{-ones} delta_tail,
// coalesced when tail = 0 or ones = 0.
inline DiscreteMeasure doubling_reset_power_delta(const Rational& x, long k) {
  if (k < 0) throw std::invalid_argument("iteration count must be >= 0");
  const PrefixStats stats = prefix_stats(UnitRational(x), k);
  const Rational survive = pow2(-stats.ones);
  return DiscreteMeasure(SpaceKind::kCircle,
                         {{Rational(0), Rational(1 - survive)}, {stats.tail, survive}});
}

inline TransitionKernel svc_interval_kernel(std::shared_ptr<const SvcTree> tree) {
  if (!tree) throw std::invalid_argument("kernel needs a tree");
  TransitionKernel k;
  k.label = "svc-interval";
  k.space = SpaceKind::kIntervalUnion;
  k.row = [tree](const Rational& x) {
    if (x >= -2 && x <= -1) {
      return DiscreteMeasure::delta(SpaceKind::kIntervalUnion, svc_map(*tree, x).value);
    }
    const Rational half = make_rational(1, 2);
    if (x >= 0 && x < half) {
      return DiscreteMeasure::delta(SpaceKind::kIntervalUnion, Rational(2 * x));
    }
    if (x >= half && x <= 1) {
      return DiscreteMeasure(SpaceKind::kIntervalUnion,
                             {{Rational(0), Rational(2 * x - 1)}, {Rational(1), Rational(2 - 2 * x)}});
    }
    throw std::invalid_argument("point " + format_rational(x) +
                                " outside [-2,-1] union [0,1]");
  };
  return k;
}

inline TransitionKernel svc_interval_kernel(int depth) {
  return svc_interval_kernel(std::make_shared<const SvcTree>(SvcTree::build(depth)));
}

// Unit translation on the real line; its dual shifts fields left.
inline TransitionKernel translation_kernel() {
  TransitionKernel k;
  k.label = "translation";
  k.space = SpaceKind::kRealLine;
  k.row = [](const Rational& x) {
    return DiscreteMeasure::delta(SpaceKind::kRealLine, Rational(x + 1));
  };
  return k;
}

// Bump train anchored at z: on [z+n, z+n+2/(n+2)) for each n >= 1 the value
// is (n+2)^2 * s * (2/(n+2) - s) with s the offset into the bump; zero
// elsewhere. Every bump has height exactly 1, at offset 1/(n+2).
inline ScalarField translation_bump_field(const Rational& z) {
  ScalarField f;
  f.label = "bump-train";
  f.eval_exact = [z](const Rational& x) -> Rational {
    const Rational s = x - z;
    if (s < 1) return Rational(0);
    const Integer n = floor_int(s);
    const Rational offset = s - Rational(n);
    const Rational width = make_rational(Integer(2), n + 2);
    if (offset >= width) return Rational(0);
    const Rational steep(Integer((n + 2) * (n + 2)));
    return steep * offset * (width - offset);
  };
  f.eval = [ex = f.eval_exact](const Rational& x) { return ex(x).get_d(); };
  f.bound = 1.0;
  return f;
}

// |U^m f_z evaluated at z + 1/(m+2) minus at z| for the unit translation,
// i.e. the field compared at z+m+1/(m+2) and z+m. Exactly 1 for every
// m >= 1: the first point sits at the bump peak, the second at its foot.
inline Rational translation_bump_gap(const Rational& z, long m) {
  if (m < 1) throw std::invalid_argument("bump index must be >= 1");
  const ScalarField f = translation_bump_field(z);
  const Rational at_peak = f.eval_exact(z + Rational(m) + make_rational(1, m + 2));
  const Rational at_foot = f.eval_exact(z + Rational(m));
  return abs(at_peak - at_foot);
}

}  // namespace feller

#endif  // FELLER_EXAMPLES_HPP_
