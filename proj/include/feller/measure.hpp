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

#ifndef FELLER_MEASURE_HPP_
#define FELLER_MEASURE_HPP_

// Finitely supported signed measures with exact rational weights, and the
// scalar fields they are integrated against. Supports are kept sorted and
// coalesced by exact point equality; zero weights are dropped, so measure
// equality is plain structural equality.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "feller/rational.hpp"
#include "feller/space.hpp"

namespace feller {

class DiscreteMeasure {
 public:
  using Entry = std::pair<Rational, Rational>;  // (point, weight)

  DiscreteMeasure(SpaceKind space, std::vector<Entry> entries)
      : space_(space), entries_(std::move(entries)) {
    normalize();
    validate_points();
  }

  static DiscreteMeasure zero(SpaceKind space) { return DiscreteMeasure(space, {}); }

  static DiscreteMeasure delta(SpaceKind space, Rational point) {
    return DiscreteMeasure(space, {{std::move(point), Rational(1)}});
  }

  SpaceKind space() const { return space_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Rational total_mass() const {
    Rational sum(0);
    for (const Entry& e : entries_) sum += e.second;
    return sum;
  }

  // True when all weights are positive and the total mass is exactly 1.
  bool is_probability() const {
    for (const Entry& e : entries_) {
      if (e.second <= 0) return false;
    }
    return total_mass() == 1;
  }

  friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    return a.space_ == b.space_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    return !(a == b);
  }

 private:
  void normalize() {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (Entry& e : entries_) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
        if (merged.back().second == 0) merged.pop_back();
      } else if (e.second != 0) {
        merged.push_back(std::move(e));
      }
    }
    entries_ = std::move(merged);
  }

  void validate_points() const {
    if (space_ == SpaceKind::kCircle) {
      for (const Entry& e : entries_) {
        if (e.first < 0 || e.first >= 1) {
          throw std::invalid_argument("circle measure point " +
                                      format_rational(e.first) + " outside [0,1)");
        }
      }
    } else if (space_ == SpaceKind::kIntervalUnion) {
      for (const Entry& e : entries_) {
        const Rational& x = e.first;
        if (!((x >= -2 && x <= -1) || (x >= 0 && x <= 1))) {
          throw std::invalid_argument("measure point " + format_rational(x) +
                                      " outside [-2,-1] union [0,1]");
        }
      }
    }
  }

  SpaceKind space_;
  std::vector<Entry> entries_;
};

// Total variation norm: sum of |w_i| over the coalesced support.
inline Rational tv_norm(const DiscreteMeasure& mu) {
  Rational sum(0);
  for (const auto& [point, weight] : mu.entries()) sum += abs(weight);
  return sum;
}

// a*mu + b*nu with exact coefficients, coalesced.
inline DiscreteMeasure combine(const Rational& a, const DiscreteMeasure& mu,
                               const Rational& b, const DiscreteMeasure& nu) {
  if (mu.space() != nu.space()) {
    throw std::invalid_argument("cannot combine measures on different spaces");
  }
  std::vector<DiscreteMeasure::Entry> entries;
  entries.reserve(mu.size() + nu.size());
  for (const auto& [point, weight] : mu.entries()) entries.emplace_back(point, a * weight);
  for (const auto& [point, weight] : nu.entries()) entries.emplace_back(point, b * weight);
  return DiscreteMeasure(mu.space(), std::move(entries));
}

// A bounded scalar function on the state space. `eval` is always present;
// `eval_exact` exists for fields with rational values at rational points and
// enables exact integration. `bound` and `lip`, when declared, are promises
// checked opportunistically at evaluation points.
struct ScalarField {
  std::string label;
  std::function<double(const Rational&)> eval;
  std::function<Rational(const Rational&)> eval_exact;  // may be empty
  std::optional<double> bound;
  std::optional<double> lip;

  // Tent profile on the circle: t -> min(2t, 2(1-t)). Vanishes at 0, peaks
  // at 1 on the half-turn point, and is 1-Lipschitz for the chord metric.
  static ScalarField hat() {
    ScalarField f;
    f.label = "hat";
    f.eval_exact = [](const Rational& x) -> Rational {
      if (x < 0 || x >= 1) {
        throw std::invalid_argument("hat field expects a point in [0,1)");
      }
      return x <= make_rational(1, 2) ? Rational(2 * x) : Rational(2 * (1 - x));
    };
    f.eval = [ex = f.eval_exact](const Rational& x) { return ex(x).get_d(); };
    f.bound = 1.0;
    f.lip = 1.0;
    return f;
  }

  // Identity coordinate, f(x) = x.
  static ScalarField coordinate() {
    ScalarField f;
    f.label = "coord";
    f.eval_exact = [](const Rational& x) { return x; };
    f.eval = [](const Rational& x) { return x.get_d(); };
    f.lip = 1.0;
    return f;
  }

  static ScalarField constant(const Rational& c) {
    ScalarField f;
    f.label = "const";
    f.eval_exact = [c](const Rational&) { return c; };
    f.eval = [c](const Rational&) { return c.get_d(); };
    f.bound = std::fabs(c.get_d());
    f.lip = 0.0;
    return f;
  }
};

namespace internal {
inline void check_bound(const ScalarField& f, const Rational& x, double value) {
  if (f.bound && std::fabs(value) > *f.bound + 1e-9) {
    throw std::invalid_argument("field '" + f.label + "' violates its declared bound at " +
                                format_rational(x));
  }
}
}  // namespace internal

// <f, mu> = sum w_i f(x_i). Weights stay exact until the final
// multiplication, where each term is converted to double.
inline double integrate(const ScalarField& f, const DiscreteMeasure& mu) {
  if (!f.eval) throw std::invalid_argument("field has no evaluator");
  double sum = 0.0;
  for (const auto& [point, weight] : mu.entries()) {
    const double value = f.eval(point);
    internal::check_bound(f, point, value);
    sum += weight.get_d() * value;
  }
  return sum;
}

// Exact pairing for fields with a rational evaluator.
inline Rational integrate_exact(const ScalarField& f, const DiscreteMeasure& mu) {
  if (!f.eval_exact) {
    throw std::invalid_argument("field '" + f.label + "' has no exact evaluator");
  }
  Rational sum(0);
  for (const auto& [point, weight] : mu.entries()) {
    sum += weight * f.eval_exact(point);
  }
  return sum;
}

}  // namespace feller

#endif  // FELLER_MEASURE_HPP_
