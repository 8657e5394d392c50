// Copyright 2026 The Feller Lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "feller/svc.hpp"

namespace feller {
namespace {

TEST_CASE("level one removes the middle quarter") {
  const SvcTree tree = SvcTree::build(1);
  REQUIRE(tree.kept()[0].size() == 1);
  CHECK(tree.kept()[0][0].a == Rational(-2));
  CHECK(tree.kept()[0][0].b == Rational(-1));
  REQUIRE(tree.kept()[1].size() == 2);
  CHECK(tree.kept()[1][0].a == Rational(-2));
  CHECK(tree.kept()[1][0].b == make_rational(-13, 8));
  CHECK(tree.kept()[1][1].a == make_rational(-11, 8));
  CHECK(tree.kept()[1][1].b == Rational(-1));
  REQUIRE(tree.removed()[1].size() == 1);
  CHECK(tree.removed()[1][0].a == make_rational(-13, 8));
  CHECK(tree.removed()[1][0].b == make_rational(-11, 8));
}

TEST_CASE("kept interval lengths follow the closed form") {
  const SvcTree tree = SvcTree::build(8);
  for (int n = 0; n <= 8; ++n) {
    const auto& level = tree.kept()[static_cast<std::size_t>(n)];
    REQUIRE(level.size() == (std::size_t{1} << n));
    // Every kept interval at level n has length (2^n + 1) / (2 * 4^n).
    const Rational want = make_rational((Integer(1) << n) + 1, Integer(2) << (2 * n));
    for (const SvcInterval& iv : level) {
      CHECK(iv.b - iv.a == want);
      CHECK(iv.a >= Rational(-2));
      CHECK(iv.b <= Rational(-1));
    }
    if (n >= 1) {
      const auto& middles = tree.removed()[static_cast<std::size_t>(n)];
      REQUIRE(middles.size() == (std::size_t{1} << (n - 1)));
      for (const SvcInterval& iv : middles) CHECK(iv.b - iv.a == pow2(-2 * n));
    }
  }
}

TEST_CASE("children partition their parent around the removed middle") {
  const SvcTree tree = SvcTree::build(6);
  for (int n = 1; n <= 6; ++n) {
    const auto& parents = tree.kept()[static_cast<std::size_t>(n - 1)];
    const auto& children = tree.kept()[static_cast<std::size_t>(n)];
    const auto& middles = tree.removed()[static_cast<std::size_t>(n)];
    for (std::size_t p = 0; p < parents.size(); ++p) {
      const SvcInterval& left = children[2 * p];
      const SvcInterval& right = children[2 * p + 1];
      const SvcInterval& gap = middles[p];
      CHECK(left.a == parents[p].a);
      CHECK(left.b == gap.a);
      CHECK(gap.b == right.a);
      CHECK(right.b == parents[p].b);
    }
  }
}

TEST_CASE("kept mass is one half plus the leftover tail") {
  const SvcTree tree = SvcTree::build(12);
  for (int n = 0; n <= 12; ++n) {
    CHECK(tree.kept_total(n) == make_rational(1, 2) + pow2(-(n + 1)));
  }
  CHECK_THROWS_AS(tree.kept_total(13), std::invalid_argument);
}

TEST_CASE("classification separates removed and kept points") {
  const SvcTree tree = SvcTree::build(4);
  const SvcClassification mid = tree.classify(make_rational(-3, 2));
  CHECK(mid.status == SvcStatus::kRemoved);
  CHECK(mid.level == 1);
  CHECK(mid.index == 1);

  // Removed endpoints survive: they classify as kept.
  const SvcClassification edge = tree.classify(make_rational(-13, 8));
  CHECK(edge.status == SvcStatus::kKeptAtDepth);
  CHECK(edge.level == 4);

  const SvcClassification left = tree.classify(Rational(-2));
  CHECK(left.status == SvcStatus::kKeptAtDepth);
  CHECK(left.index == 1);

  const SvcClassification l2 = tree.classify(make_rational(-29, 16));
  CHECK(l2.status == SvcStatus::kRemoved);
  CHECK(l2.level == 2);
  CHECK(l2.index == 1);

  CHECK_THROWS_AS(tree.classify(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(tree.classify(make_rational(-5, 2)), std::invalid_argument);
}

TEST_CASE("jump map hits the documented values") {
  const SvcTree tree = SvcTree::build(8);
  // Center of the level-1 middle: full peak height 1/1.
  const SvcMapResult center = svc_map(tree, make_rational(-3, 2));
  CHECK(center.value == Rational(1));
  CHECK(center.exact);
  CHECK(center.error_bound == Rational(0));

  // Center of a level-2 middle: peak 1/2.
  const SvcMapResult c2 = svc_map(tree, make_rational(-29, 16));
  CHECK(c2.value == make_rational(1, 2));
  CHECK(c2.exact);

  // Off-center inside the level-1 middle (-13/8, -11/8):
  // 64 * (3/16) * (1/16) = 3/4.
  const SvcMapResult off = svc_map(tree, make_rational(-25, 16));
  CHECK(off.value == make_rational(3, 4));
  CHECK(off.exact);

  // Values vanish toward the removed interval's ends.
  const SvcMapResult near_edge = svc_map(tree, make_rational(-13, 8) + pow2(-20));
  CHECK(near_edge.value > Rational(0));
  CHECK(near_edge.value < make_rational(1, 1000));
}

TEST_CASE("jump map peaks match the bump heights") {
  const SvcTree tree = SvcTree::build(10);
  for (int n = 1; n <= 10; ++n) {
    const SvcInterval& middle = tree.removed()[static_cast<std::size_t>(n)][0];
    const SvcMapResult peak = svc_map(tree, (middle.a + middle.b) / 2);
    CHECK(peak.value == svc_bump_peak(n));
    CHECK(peak.exact);
    CHECK(peak.cls.level == n);
  }
  CHECK_THROWS_AS(svc_bump_peak(0), std::invalid_argument);
}

TEST_CASE("kept points map to zero, exactly only at endpoints") {
  const SvcTree tree = SvcTree::build(5);
  const SvcMapResult at_end = svc_map(tree, Rational(-2));
  CHECK(at_end.value == Rational(0));
  CHECK(at_end.exact);
  CHECK(at_end.error_bound == Rational(0));

  const SvcMapResult survivor = svc_map(tree, make_rational(-11, 8));
  CHECK(survivor.value == Rational(0));
  CHECK(survivor.exact);

  // An interior kept point might still fall into a deeper gap, so the
  // reported zero carries the truncation bound 1/(depth+1).
  const SvcInterval& leaf = tree.kept()[5][0];
  const SvcMapResult interior = svc_map(tree, (leaf.a + leaf.b) / 2);
  CHECK(interior.value == Rational(0));
  CHECK_FALSE(interior.exact);
  CHECK(interior.error_bound == make_rational(1, 6));
}

TEST_CASE("depth bounds are enforced") {
  CHECK_THROWS_AS(SvcTree::build(-1), std::invalid_argument);
  CHECK_THROWS_AS(SvcTree::build(kMaxSvcDepth + 1), std::invalid_argument);
  CHECK_NOTHROW(SvcTree::build(0));
}

}  // namespace
}  // namespace feller
