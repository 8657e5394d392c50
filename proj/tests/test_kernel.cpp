// Copyright 2026 The Feller Lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "feller/examples.hpp"
#include "feller/kernel.hpp"

namespace feller {
namespace {

TEST_CASE("applying a kernel conserves mass exactly") {
  const TransitionKernel k = doubling_reset_kernel();
  DiscreteMeasure mu(SpaceKind::kCircle, {{make_rational(1, 3), make_rational(2, 5)},
                                          {make_rational(5, 8), make_rational(3, 5)}});
  for (int n = 0; n < 25; ++n) {
    CHECK(mu.total_mass() == Rational(1));
    CHECK(mu.is_probability());
    mu = apply(k, mu);
  }
  CHECK(mu.total_mass() == Rational(1));
}

TEST_CASE("applying a kernel is linear") {
  const TransitionKernel k = doubling_reset_kernel();
  const DiscreteMeasure a = DiscreteMeasure::delta(SpaceKind::kCircle, make_rational(1, 3));
  const DiscreteMeasure b = DiscreteMeasure::delta(SpaceKind::kCircle, make_rational(5, 7));
  const Rational wa = make_rational(2, 7);
  const Rational wb = make_rational(5, 7);
  const DiscreteMeasure mixed = apply(k, combine(wa, a, wb, b));
  const DiscreteMeasure split = combine(wa, apply(k, a), wb, apply(k, b));
  CHECK(mixed == split);
}

TEST_CASE("zero iterations return the input") {
  const TransitionKernel k = doubling_reset_kernel();
  const DiscreteMeasure mu = DiscreteMeasure::delta(SpaceKind::kCircle, make_rational(1, 3));
  CHECK(iterate(k, mu, 0) == mu);
  CHECK_THROWS_AS(iterate(k, mu, -1), std::invalid_argument);
}

TEST_CASE("space mismatch is rejected") {
  const TransitionKernel k = doubling_reset_kernel();
  const DiscreteMeasure mu = DiscreteMeasure::delta(SpaceKind::kRealLine, Rational(0));
  CHECK_THROWS_AS(apply(k, mu), std::invalid_argument);
}

TEST_CASE("forward iteration agrees with the recursive dual") {
  const TransitionKernel k = doubling_reset_kernel();
  const ScalarField f = ScalarField::hat();
  for (const Rational& x : {make_rational(1, 3), make_rational(5, 7), make_rational(9, 11),
                            make_rational(1, 1024), Rational(0)}) {
    std::map<std::pair<long, Rational>, double> memo;
    for (long n : {0L, 1L, 2L, 5L, 11L, 20L}) {
      const double forward = dual_power(k, f, x, n);
      const double recursive = dual_power_recursive(k, f, x, n, memo);
      CHECK_THAT(forward, Catch::Matchers::WithinAbs(recursive, 1e-10));
    }
  }
}

TEST_CASE("recursive dual also matches on the split kernel") {
  const TransitionKernel k = svc_interval_kernel(8);
  const ScalarField f = ScalarField::coordinate();
  for (const Rational& x : {make_rational(-3, 2), make_rational(3, 4), make_rational(1, 5),
                            Rational(1), Rational(-2)}) {
    for (long n : {0L, 1L, 3L, 7L}) {
      const double forward = dual_power(k, f, x, n);
      const double recursive = dual_power_recursive(k, f, x, n);
      CHECK_THAT(forward, Catch::Matchers::WithinAbs(recursive, 1e-10));
    }
  }
}

TEST_CASE("exact dual powers have no rounding at all") {
  const TransitionKernel k = doubling_reset_kernel();
  const ScalarField f = ScalarField::hat();
  // One step from 5/8: half the mass resets to 0, half lands on 1/4.
  CHECK(dual_power_exact(k, f, make_rational(5, 8), 0) == make_rational(3, 4));
  CHECK(dual_power_exact(k, f, make_rational(5, 8), 1) == make_rational(1, 4));
  CHECK(dual_power_exact(k, f, make_rational(1, 3), 1) == make_rational(2, 3));
}

TEST_CASE("support cap aborts blowups") {
  // Each step splits every atom in two at fresh points, so the support
  // doubles and must hit the cap.
  TransitionKernel k;
  k.space = SpaceKind::kRealLine;
  k.label = "splitter";
  k.row = [](const Rational& x) {
    return DiscreteMeasure(SpaceKind::kRealLine,
                           {{3 * x + 1, make_rational(1, 2)}, {3 * x + 2, make_rational(1, 2)}});
  };
  DiscreteMeasure mu = DiscreteMeasure::delta(SpaceKind::kRealLine, Rational(0));
  CHECK_THROWS_AS(iterate(k, mu, 40, 1000), std::runtime_error);
  CHECK_NOTHROW(iterate(k, mu, 9, 1000));
}

TEST_CASE("kernel rows must be probabilities") {
  TransitionKernel k;
  k.space = SpaceKind::kRealLine;
  k.label = "leaky";
  k.row = [](const Rational& x) {
    return DiscreteMeasure(SpaceKind::kRealLine, {{x, make_rational(1, 2)}});
  };
  const DiscreteMeasure mu = DiscreteMeasure::delta(SpaceKind::kRealLine, Rational(0));
  CHECK_THROWS_AS(apply(k, mu), std::runtime_error);
}

}  // namespace
}  // namespace feller
