// Copyright 2026 The Feller Lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "feller/io.hpp"
#include "feller/measure.hpp"

namespace feller {
namespace {

using nlohmann::json;

TEST_CASE("entries coalesce, sort and drop zeros") {
  const DiscreteMeasure mu(SpaceKind::kCircle,
                           {{make_rational(1, 2), make_rational(1, 4)},
                            {Rational(0), make_rational(1, 2)},
                            {make_rational(1, 2), make_rational(1, 4)},
                            {make_rational(1, 3), Rational(0)}});
  REQUIRE(mu.size() == 2);
  CHECK(mu.entries()[0].first == Rational(0));
  CHECK(mu.entries()[0].second == make_rational(1, 2));
  CHECK(mu.entries()[1].first == make_rational(1, 2));
  CHECK(mu.entries()[1].second == make_rational(1, 2));
  CHECK(mu.total_mass() == Rational(1));
  CHECK(mu.is_probability());
}

TEST_CASE("opposite weights at one point cancel away") {
  const DiscreteMeasure mu(SpaceKind::kRealLine,
                           {{Rational(3), Rational(1)}, {Rational(3), Rational(-1)}});
  CHECK(mu.size() == 0);
  CHECK(mu.total_mass() == Rational(0));
  CHECK(mu == DiscreteMeasure::zero(SpaceKind::kRealLine));
}

TEST_CASE("point membership is enforced per space") {
  CHECK_THROWS_AS(DiscreteMeasure(SpaceKind::kCircle, {{Rational(1), Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      DiscreteMeasure(SpaceKind::kIntervalUnion, {{make_rational(-1, 2), Rational(1)}}),
      std::invalid_argument);
  CHECK_NOTHROW(DiscreteMeasure(SpaceKind::kIntervalUnion, {{Rational(-2), Rational(1)}}));
  CHECK_NOTHROW(DiscreteMeasure(SpaceKind::kRealLine, {{Rational(100), Rational(1)}}));
}

TEST_CASE("signed measures expose a total variation norm") {
  const DiscreteMeasure delta0 = DiscreteMeasure::delta(SpaceKind::kCircle, Rational(0));
  const DiscreteMeasure delta_half =
      DiscreteMeasure::delta(SpaceKind::kCircle, make_rational(1, 2));
  const DiscreteMeasure diff = combine(Rational(1), delta0, Rational(-1), delta_half);
  CHECK(tv_norm(diff) == Rational(2));
  CHECK(tv_norm(delta0) == Rational(1));
  CHECK_FALSE(diff.is_probability());
}

TEST_CASE("combine refuses mixed spaces") {
  const DiscreteMeasure a = DiscreteMeasure::delta(SpaceKind::kCircle, Rational(0));
  const DiscreteMeasure b = DiscreteMeasure::delta(SpaceKind::kRealLine, Rational(0));
  CHECK_THROWS_AS(combine(Rational(1), a, Rational(1), b), std::invalid_argument);
}

TEST_CASE("hat field values") {
  const ScalarField f = ScalarField::hat();
  REQUIRE(f.eval_exact);
  CHECK(f.eval_exact(Rational(0)) == Rational(0));
  CHECK(f.eval_exact(make_rational(1, 2)) == Rational(1));
  CHECK(f.eval_exact(make_rational(1, 4)) == make_rational(1, 2));
  CHECK(f.eval_exact(make_rational(3, 4)) == make_rational(1, 2));
  CHECK(f.eval_exact(make_rational(7, 8)) == make_rational(1, 4));
  CHECK(f.eval(make_rational(1, 8)) == 0.25);
  REQUIRE(f.bound.has_value());
  CHECK(*f.bound == 1.0);
}

TEST_CASE("integration is linear in the measure") {
  const ScalarField f = ScalarField::hat();
  const DiscreteMeasure mu(SpaceKind::kCircle,
                           {{Rational(0), make_rational(3, 4)},
                            {make_rational(1, 2), make_rational(1, 4)}});
  CHECK(integrate_exact(f, mu) == make_rational(1, 4));
  CHECK_THAT(integrate(f, mu), Catch::Matchers::WithinAbs(0.25, 1e-15));
  const ScalarField c = ScalarField::constant(make_rational(5, 2));
  CHECK(integrate_exact(c, mu) == make_rational(5, 2));
}

TEST_CASE("measure json round trip") {
  const DiscreteMeasure mu(SpaceKind::kIntervalUnion,
                           {{make_rational(-3, 2), make_rational(1, 3)},
                            {Rational(1), make_rational(2, 3)}});
  const json j = measure_to_json(mu);
  CHECK(j["space"] == "ex2");
  CHECK(j["points"][0] == "-3/2");
  CHECK(j["weights"][1] == "2/3");
  const DiscreteMeasure back = measure_from_json(j);
  CHECK(back == mu);
}

TEST_CASE("measure json errors name the offending field") {
  const auto parse = [](const char* text) { return measure_from_json(json::parse(text)); };
  CHECK_THROWS_WITH(parse(R"({"points":["0/1"],"weights":["1/1"]})"),
                    Catch::Matchers::ContainsSubstring("space"));
  CHECK_THROWS_WITH(parse(R"({"space":"circle","points":["0/1"],"weights":[]})"),
                    Catch::Matchers::ContainsSubstring("weights"));
  CHECK_THROWS_WITH(parse(R"({"space":"circle","points":["1/0"],"weights":["1/1"]})"),
                    Catch::Matchers::ContainsSubstring("points[0]"));
  CHECK_THROWS_WITH(parse(R"({"space":"moon","points":[],"weights":[]})"),
                    Catch::Matchers::ContainsSubstring("moon"));
  CHECK_THROWS_AS(parse(R"({"space":"circle","points":["3/2"],"weights":["1/1"]})"),
                  std::invalid_argument);
}

TEST_CASE("finite kernel tables load from json") {
  const json j = json::parse(R"({
    "space": "finite",
    "points": ["0/1", "1/1"],
    "dist": [[0.0, 1.0], [1.0, 0.0]],
    "rows": {
      "0/1": {"points": ["0/1", "1/1"], "weights": ["1/2", "1/2"]},
      "1/1": {"points": ["0/1"], "weights": ["1/1"]}
    }
  })");
  const KernelPackage pkg = kernel_from_json(j);
  CHECK(pkg.space.finite_points().size() == 2);
  const DiscreteMeasure row0 = pkg.kernel.row(Rational(0));
  CHECK(row0.size() == 2);
  CHECK(row0.entries()[0].second == make_rational(1, 2));
  const DiscreteMeasure row1 = pkg.kernel.row(Rational(1));
  CHECK(row1 == DiscreteMeasure::delta(SpaceKind::kFinite, Rational(0)));

  // Rows must be probabilities over listed points.
  json bad = j;
  bad["rows"]["1/1"]["weights"][0] = "1/2";
  CHECK_THROWS_AS(kernel_from_json(bad), std::invalid_argument);
  json missing = j;
  missing["rows"].erase("1/1");
  const KernelPackage sparse = kernel_from_json(missing);
  CHECK_THROWS_AS(sparse.kernel.row(Rational(1)), std::invalid_argument);
}

}  // namespace
}  // namespace feller
