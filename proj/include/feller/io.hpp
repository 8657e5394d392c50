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

#ifndef FELLER_IO_HPP_
#define FELLER_IO_HPP_

// JSON interchange for measures and finite-space kernels, with strict
// validation: every rational is a "p/q" literal, every error names the
// offending field.
//
// Measure files:   {"space": "circle"|"ex2"|"real",
//                   "points": ["p/q", ...], "weights": ["p/q", ...]}
// Kernel files:    {"space": "finite", "points": [...],
//                   "dist": [[...]], "rows": {"p/q": {"points": [...],
//                   "weights": [...]}}}

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "feller/kernel.hpp"
#include "feller/measure.hpp"
#include "feller/rational.hpp"
#include "feller/space.hpp"

namespace feller {

inline SpaceKind space_kind_from_string(const std::string& name) {
  if (name == "circle") return SpaceKind::kCircle;
  if (name == "ex2") return SpaceKind::kIntervalUnion;
  if (name == "real") return SpaceKind::kRealLine;
  if (name == "finite") return SpaceKind::kFinite;
  throw std::invalid_argument("space: unknown space '" + name + "'");
}

namespace internal {

inline Rational parse_rational_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw std::invalid_argument(where + ": expected a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(where + ": " + e.what());
  }
}

inline std::vector<Rational> parse_rational_array(const nlohmann::json& j,
                                                  const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_rational_field(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace internal

inline DiscreteMeasure measure_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("measure: expected a JSON object");
  if (!j.contains("space")) throw std::invalid_argument("space: missing");
  if (!j["space"].is_string()) throw std::invalid_argument("space: expected a string");
  const SpaceKind kind = space_kind_from_string(j["space"].get<std::string>());
  if (!j.contains("points")) throw std::invalid_argument("points: missing");
  if (!j.contains("weights")) throw std::invalid_argument("weights: missing");
  const auto points = internal::parse_rational_array(j["points"], "points");
  const auto weights = internal::parse_rational_array(j["weights"], "weights");
  if (points.size() != weights.size()) {
    throw std::invalid_argument("weights: got " + std::to_string(weights.size()) +
                                " weights for " + std::to_string(points.size()) + " points");
  }
  std::vector<DiscreteMeasure::Entry> entries;
  entries.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    entries.emplace_back(points[i], weights[i]);
  }
  return DiscreteMeasure(kind, std::move(entries));
}

inline nlohmann::json measure_to_json(const DiscreteMeasure& mu) {
  nlohmann::json j;
  j["space"] = space_kind_name(mu.space());
  auto points = nlohmann::json::array();
  auto weights = nlohmann::json::array();
  for (const auto& [point, weight] : mu.entries()) {
    points.push_back(format_rational(point));
    weights.push_back(format_rational(weight));
  }
  j["points"] = std::move(points);
  j["weights"] = std::move(weights);
  return j;
}

struct KernelPackage {
  TransitionKernel kernel;
  MetricSpace space = MetricSpace::real_line();
};

// Finite metric space plus one probability row per point. Rows are keyed
// by the canonical "p/q" form of the source point and validated eagerly.
inline KernelPackage kernel_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("kernel: expected a JSON object");
  if (!j.contains("space") || !j["space"].is_string() ||
      j["space"].get<std::string>() != "finite") {
    throw std::invalid_argument("space: kernel tables must declare \"finite\"");
  }
  if (!j.contains("points")) throw std::invalid_argument("points: missing");
  const auto points = internal::parse_rational_array(j["points"], "points");
  if (!j.contains("dist") || !j["dist"].is_array() || j["dist"].size() != points.size()) {
    throw std::invalid_argument("dist: expected one row per point");
  }
  std::vector<std::vector<double>> dist;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& row = j["dist"][i];
    if (!row.is_array() || row.size() != points.size()) {
      throw std::invalid_argument("dist[" + std::to_string(i) + "]: expected " +
                                  std::to_string(points.size()) + " entries");
    }
    std::vector<double> drow;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number()) {
        throw std::invalid_argument("dist[" + std::to_string(i) + "][" + std::to_string(c) +
                                    "]: expected a number");
      }
      drow.push_back(row[c].get<double>());
    }
    dist.push_back(std::move(drow));
  }
  if (!j.contains("rows") || !j["rows"].is_object()) {
    throw std::invalid_argument("rows: expected an object keyed by point");
  }
  auto table = std::make_shared<std::map<Rational, DiscreteMeasure>>();
  for (const auto& [key, value] : j["rows"].items()) {
    Rational source;
    try {
      source = parse_rational(key);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("rows: bad key: ") + e.what());
    }
    if (!value.is_object() || !value.contains("points") || !value.contains("weights")) {
      throw std::invalid_argument("rows[" + key + "]: expected points and weights");
    }
    const auto row_points =
        internal::parse_rational_array(value["points"], "rows[" + key + "].points");
    const auto row_weights =
        internal::parse_rational_array(value["weights"], "rows[" + key + "].weights");
    if (row_points.size() != row_weights.size()) {
      throw std::invalid_argument("rows[" + key + "]: points and weights differ in length");
    }
    std::vector<DiscreteMeasure::Entry> entries;
    for (std::size_t i = 0; i < row_points.size(); ++i) {
      entries.emplace_back(row_points[i], row_weights[i]);
    }
    DiscreteMeasure row(SpaceKind::kFinite, std::move(entries));
    if (!row.is_probability()) {
      throw std::invalid_argument("rows[" + key + "]: weights must be a probability vector");
    }
    table->emplace(std::move(source), std::move(row));
  }

  KernelPackage out;
  out.space = MetricSpace::finite(points, dist);
  out.kernel.label = "user-table";
  out.kernel.space = SpaceKind::kFinite;
  out.kernel.row = [table](const Rational& x) -> DiscreteMeasure {
    auto it = table->find(x);
    if (it == table->end()) {
      throw std::invalid_argument("kernel table has no row for " + format_rational(x));
    }
    return it->second;
  };
  return out;
}

}  // namespace feller

#endif  // FELLER_IO_HPP_
