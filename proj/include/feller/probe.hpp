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

#ifndef FELLER_PROBE_HPP_
#define FELLER_PROBE_HPP_

// Numerical probes for equicontinuity of the dual iterates and for
// convergence of forward iterates. The pointwise probes track
// |U^n f(x_m) - U^n f(z)| for an approach sequence x_m -> z with the
// supremum truncated at n_max; the witnesses construct approach points
// where that quantity provably stays large. The trace probes measure the
// Fortet-Mourier distance of forward iterates to a target measure.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "feller/examples.hpp"
#include "feller/fm.hpp"
#include "feller/kernel.hpp"
#include "feller/measure.hpp"
#include "feller/rational.hpp"
#include "feller/space.hpp"
#include "feller/svc.hpp"

namespace feller {

inline constexpr long kDefaultNMax = 64;

struct ModulusReport {
  Rational z;
  std::vector<Rational> approach;           // x_m, m = 0..M-1
  long n_max = 0;
  std::vector<std::vector<double>> values;  // values[m][n-1] = |U^n f(x_m) - U^n f(z)|
  std::vector<double> modulus;              // max over n per approach point
};

// Tabulates |U^n f(x_m) - U^n f(z)| for n = 1..n_max. All measure
// iteration is exact; entries are computed exactly when the field has a
// rational evaluator and converted to double once at the end.
inline ModulusReport equicontinuity_modulus(const TransitionKernel& k, const ScalarField& f,
                                            const Rational& z,
                                            const std::vector<Rational>& approach,
                                            long n_max = kDefaultNMax,
                                            std::size_t support_cap = kDefaultSupportCap) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  ModulusReport report;
  report.z = z;
  report.approach = approach;
  report.n_max = n_max;

  const bool exact = static_cast<bool>(f.eval_exact);
  std::vector<Rational> z_exact;
  std::vector<double> z_values;
  {
    DiscreteMeasure mu = DiscreteMeasure::delta(k.space, z);
    for (long n = 1; n <= n_max; ++n) {
      mu = apply(k, mu, support_cap);
      if (exact) {
        z_exact.push_back(integrate_exact(f, mu));
      } else {
        z_values.push_back(integrate(f, mu));
      }
    }
  }
  for (const Rational& x : approach) {
    std::vector<double> row;
    row.reserve(static_cast<std::size_t>(n_max));
    double worst = 0.0;
    DiscreteMeasure mu = DiscreteMeasure::delta(k.space, x);
    for (long n = 1; n <= n_max; ++n) {
      mu = apply(k, mu, support_cap);
      double entry;
      if (exact) {
        entry = Rational(abs(integrate_exact(f, mu) - z_exact[static_cast<std::size_t>(n - 1)]))
                    .get_d();
      } else {
        entry = std::fabs(integrate(f, mu) - z_values[static_cast<std::size_t>(n - 1)]);
      }
      row.push_back(entry);
      worst = std::max(worst, entry);
    }
    report.values.push_back(std::move(row));
    report.modulus.push_back(worst);
  }
  return report;
}

// K-bit truncations of z: binary prefixes of length k for each requested k.
inline std::vector<Rational> truncation_approach(const Rational& z,
                                                 const std::vector<long>& bits) {
  const UnitRational point(z);
  std::vector<Rational> out;
  out.reserve(bits.size());
  for (long k : bits) {
    const PrefixStats stats = prefix_stats(point, k);
    out.push_back(z - stats.tail * pow2(-k));
  }
  return out;
}

// z + 2^{-k} for k = 1..count.
inline std::vector<Rational> halving_approach(const Rational& z, long count) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 1; k <= count; ++k) out.push_back(z + pow2(-k));
  return out;
}

struct DyadicWitness {
  Rational x;      // the approach point z + 2^{-K-n}
  long k_bits = 0; // K, the length of z's terminating expansion
  long steps = 0;  // the dual power compared, K + n - 1
  Rational value;  // |U^steps f(x) - U^steps f(z)|, exact
};

// Witness for the doubling-reset kernel at a dyadic circle point z: the
// point x = z + 2^{-K-n} agrees with z on every expansion digit, picks up
// one extra digit at position K+n, and after K+n-1 steps the two dual
// values differ by exactly 2^{-ones(K, z)} * f(1/2). Requires a field with
// exact values f(0) = 0 and f(1/2) = 1.
inline DyadicWitness dyadic_witness(const Rational& z, const ScalarField& f, long n) {
  if (n < 1) throw std::invalid_argument("witness index must be >= 1");
  const UnitRational point(z);
  const Integer& den = z.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::invalid_argument("witness needs a dyadic point, got " + format_rational(z));
  }
  if (!f.eval_exact) throw std::invalid_argument("witness needs an exact field");
  if (f.eval_exact(Rational(0)) != 0 || f.eval_exact(make_rational(1, 2)) != 1) {
    throw std::invalid_argument("witness field must have f(0) = 0 and f(1/2) = 1");
  }
  DyadicWitness out;
  out.k_bits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;  // den = 2^K
  out.steps = out.k_bits + n - 1;
  out.x = z + pow2(-out.k_bits - n);
  const DiscreteMeasure at_x = doubling_reset_power_delta(out.x, out.steps);
  const DiscreteMeasure at_z = doubling_reset_power_delta(z, out.steps);
  out.value = abs(integrate_exact(f, at_x) - integrate_exact(f, at_z));
  return out;
}

struct SvcWitness {
  Rational x;      // peak of the deepest removed interval next to z
  int level = 0;   // level of that removed interval
  long n0 = 0;     // doubling steps after the jump
  Rational value;  // |U^{n0+1} f(x) - U^{n0+1} f(z)|, exact
};

// Witness at a point z kept by the tree: take x at the peak of the removed
// interval carved at the deepest built level from z's kept interval, so
// the jump sends x to 1/depth. Doubling n0 = floor(log2(depth)) times
// lands in [1/2, 1], while z's orbit is stuck at 0, giving a gap of at
// least 1/2 for the coordinate field. Exactness of the z side relies on
// z lying in the limit set; endpoints of kept intervals qualify.
inline SvcWitness svc_witness(const SvcTree& tree, const Rational& z, const ScalarField& f) {
  if (tree.depth() < 1) {
    throw std::invalid_argument("no removed interval available below depth " +
                                std::to_string(tree.depth()));
  }
  if (!f.eval_exact) throw std::invalid_argument("witness needs an exact field");
  const SvcClassification cls = tree.classify(z);
  if (cls.status != SvcStatus::kKeptAtDepth) {
    throw std::invalid_argument("witness point " + format_rational(z) +
                                " lies in a removed interval");
  }
  // Walk back down to find z's kept interval at depth-1, whose removed
  // middle is the deepest removed interval flanking z.
  long parent_index = 1;
  const int depth = tree.depth();
  for (int n = 1; n < depth; ++n) {
    const SvcInterval& middle = tree.removed()[static_cast<std::size_t>(n)]
                                              [static_cast<std::size_t>(parent_index - 1)];
    parent_index = z <= middle.a ? 2 * parent_index - 1 : 2 * parent_index;
  }
  const SvcInterval& middle = tree.removed()[static_cast<std::size_t>(depth)]
                                            [static_cast<std::size_t>(parent_index - 1)];
  SvcWitness out;
  out.level = depth;
  out.x = (middle.a + middle.b) / 2;
  long n0 = 0;
  while ((2L << n0) <= depth) ++n0;  // 2^{n0} <= depth < 2^{n0+1}
  out.n0 = n0;

  const TransitionKernel kernel =
      svc_interval_kernel(std::make_shared<const SvcTree>(tree));
  const Rational vx =
      integrate_exact(f, iterate(kernel, DiscreteMeasure::delta(kernel.space, out.x), n0 + 1));
  const Rational vz =
      integrate_exact(f, iterate(kernel, DiscreteMeasure::delta(kernel.space, z), n0 + 1));
  out.value = abs(vx - vz);
  return out;
}

struct StabilityTrace {
  std::vector<double> distances;  // [n] = FM distance of the n-step iterate to the target
};

// Fortet-Mourier distance of P^n mu to a target, n = 0..n_max.
inline StabilityTrace stability_trace(const TransitionKernel& k, const DiscreteMeasure& start,
                                      const DiscreteMeasure& target, const MetricSpace& space,
                                      long n_max, const FmOptions& options = {},
                                      std::size_t support_cap = kDefaultSupportCap) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  StabilityTrace trace;
  trace.distances.reserve(static_cast<std::size_t>(n_max) + 1);
  DiscreteMeasure mu = start;
  trace.distances.push_back(fm_distance(mu, target, space, options));
  for (long n = 1; n <= n_max; ++n) {
    mu = apply(k, mu, support_cap);
    trace.distances.push_back(fm_distance(mu, target, space, options));
  }
  return trace;
}

struct BasinReport {
  bool within = false;   // worst deviation stayed below epsilon
  double worst = 0.0;
  Rational worst_point;
  long worst_n = 0;
  std::vector<Rational> grid;
};

// Checks |U^n f(x) - <f, target>| <= epsilon over a coordinate ball around
// center (grid+1 evenly spaced points) for every n in [n_min, n_max].
// Circle points are wrapped modulo 1.
inline BasinReport basin_probe(const TransitionKernel& k, const ScalarField& f,
                               const DiscreteMeasure& target, const Rational& center,
                               const Rational& radius, long grid, double epsilon, long n_min,
                               long n_max, std::size_t support_cap = kDefaultSupportCap) {
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  if (radius <= 0) throw std::invalid_argument("radius must be positive");
  if (n_min < 1 || n_max < n_min) {
    throw std::invalid_argument("need 1 <= n_min <= n_max");
  }
  BasinReport report;
  const double target_value = integrate(f, target);
  const Rational step = 2 * radius / grid;
  for (long j = 0; j <= grid; ++j) {
    Rational x = center - radius + j * step;
    if (k.space == SpaceKind::kCircle) x = frac(x);
    report.grid.push_back(x);
    DiscreteMeasure mu =
        iterate(k, DiscreteMeasure::delta(k.space, x), n_min - 1, support_cap);
    for (long n = n_min; n <= n_max; ++n) {
      mu = apply(k, mu, support_cap);
      const double deviation = std::fabs(integrate(f, mu) - target_value);
      if (deviation > report.worst) {
        report.worst = deviation;
        report.worst_point = x;
        report.worst_n = n;
      }
    }
  }
  report.within = report.worst <= epsilon;
  return report;
}

}  // namespace feller

#endif  // FELLER_PROBE_HPP_
