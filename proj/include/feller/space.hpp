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

#ifndef FELLER_SPACE_HPP_
#define FELLER_SPACE_HPP_

// State spaces the kernels act on, with their metrics, plus exact binary
// digit statistics for points of the unit circle. Points are exact
// rationals; metric values are doubles.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "feller/rational.hpp"

namespace feller {

enum class SpaceKind {
  kCircle,         // [0,1) with the chord metric
  kIntervalUnion,  // [-2,-1] union [0,1] with |x - y|
  kRealLine,       // all rationals with |x - y|
  kFinite,         // explicit point list with a distance matrix
};

inline const char* space_kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kCircle: return "circle";
    case SpaceKind::kIntervalUnion: return "ex2";
    case SpaceKind::kRealLine: return "real";
    case SpaceKind::kFinite: return "finite";
  }
  return "?";
}

// A point of the unit circle, represented in [0, 1). Construction validates
// the range; wrap() reduces an arbitrary rational modulo 1 first.
class UnitRational {
 public:
  explicit UnitRational(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ >= 1) {
      throw std::invalid_argument("circle point " + format_rational(value_) +
                                  " outside [0,1)");
    }
  }

  static UnitRational wrap(const Rational& value) { return UnitRational(frac(value)); }

  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

// Chord distance between circle points: 2*|sin(pi*(a-b))|. Symmetric and
// bounded by 2; zero exactly at equal points.
inline double circle_distance(const UnitRational& a, const UnitRational& b) {
  const double diff = Rational(a.value() - b.value()).get_d();
  return 2.0 * std::fabs(std::sin(M_PI * diff));
}

// i-th binary digit (i >= 1) of x in [0,1), under the terminating
// convention: dyadic rationals get the expansion with trailing zeros.
inline int binary_digit(const UnitRational& x, long i) {
  if (i < 1) throw std::invalid_argument("binary digit index must be >= 1");
  Integer shifted = x.value().get_num() << static_cast<unsigned long>(i);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), x.value().get_den().get_mpz_t());
  return mpz_odd_p(q.get_mpz_t()) ? 1 : 0;
}

// Digit statistics of the first k binary digits of x.
//   ones:  how many of e_1..e_k are 1
//   tail:  frac(2^k * x), the remainder after shifting k digits out
// Invariant: sum_{i<=k} e_i/2^i + tail/2^k == x exactly.
struct PrefixStats {
  long ones = 0;
  Rational tail;
};

inline PrefixStats prefix_stats(const UnitRational& x, long k) {
  if (k < 0) throw std::invalid_argument("prefix length must be >= 0");
  Integer shifted = x.value().get_num() << static_cast<unsigned long>(k);
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), shifted.get_mpz_t(),
              x.value().get_den().get_mpz_t());
  PrefixStats out;
  // q = floor(2^k x) < 2^k holds since x < 1, so q's binary digits are
  // exactly e_1..e_k and popcount gives the number of ones.
  out.ones = static_cast<long>(mpz_popcount(q.get_mpz_t()));
  out.tail = make_rational(r, x.value().get_den());
  return out;
}

// Metric space handle. Circle, interval-union and real-line need no data;
// finite spaces carry their point list and a symmetric distance matrix,
// validated exhaustively at construction.
class MetricSpace {
 public:
  static MetricSpace circle() { return MetricSpace(SpaceKind::kCircle); }
  static MetricSpace interval_union() { return MetricSpace(SpaceKind::kIntervalUnion); }
  static MetricSpace real_line() { return MetricSpace(SpaceKind::kRealLine); }

  static MetricSpace finite(std::vector<Rational> points,
                            std::vector<std::vector<double>> dist) {
    MetricSpace s(SpaceKind::kFinite);
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("finite space needs at least one point");
    if (dist.size() != n) throw std::invalid_argument("distance matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
      if (dist[i].size() != n) throw std::invalid_argument("distance matrix is not square");
      for (std::size_t j = 0; j < n; ++j) {
        if (i < j && points[i] == points[j]) {
          throw std::invalid_argument("finite space has duplicate points");
        }
        if (dist[i][j] < 0) throw std::invalid_argument("negative distance");
        if (std::fabs(dist[i][j] - dist[j][i]) > 1e-12) {
          throw std::invalid_argument("distance matrix is not symmetric");
        }
        if (i == j && dist[i][j] != 0) {
          throw std::invalid_argument("nonzero distance on the diagonal");
        }
        if (i != j && dist[i][j] == 0) {
          throw std::invalid_argument("zero distance between distinct points");
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (dist[i][j] > dist[i][k] + dist[k][j] + 1e-12) {
            throw std::invalid_argument("triangle inequality fails in finite space");
          }
        }
      }
    }
    s.points_ = std::move(points);
    s.dist_ = std::move(dist);
    return s;
  }

  SpaceKind kind() const { return kind_; }

  bool contains(const Rational& x) const {
    switch (kind_) {
      case SpaceKind::kCircle:
        return x >= 0 && x < 1;
      case SpaceKind::kIntervalUnion:
        return (x >= -2 && x <= -1) || (x >= 0 && x <= 1);
      case SpaceKind::kRealLine:
        return true;
      case SpaceKind::kFinite:
        for (const Rational& p : points_) {
          if (p == x) return true;
        }
        return false;
    }
    return false;
  }

  double distance(const Rational& x, const Rational& y) const {
    switch (kind_) {
      case SpaceKind::kCircle:
        return circle_distance(UnitRational(x), UnitRational(y));
      case SpaceKind::kIntervalUnion:
      case SpaceKind::kRealLine:
        return std::fabs(Rational(x - y).get_d());
      case SpaceKind::kFinite:
        return dist_[index_of(x)][index_of(y)];
    }
    return 0.0;
  }

  const std::vector<Rational>& finite_points() const { return points_; }

 private:
  explicit MetricSpace(SpaceKind kind) : kind_(kind) {}

  std::size_t index_of(const Rational& x) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i] == x) return i;
    }
    throw std::invalid_argument("point " + format_rational(x) +
                                " is not in the finite space");
  }

  SpaceKind kind_;
  std::vector<Rational> points_;
  std::vector<std::vector<double>> dist_;
};

}  // namespace feller

#endif  // FELLER_SPACE_HPP_
