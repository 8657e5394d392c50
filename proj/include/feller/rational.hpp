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

#ifndef FELLER_RATIONAL_HPP_
#define FELLER_RATIONAL_HPP_

// Exact rational arithmetic used everywhere mass, points and closed-form
// values are produced. Backed by GMP; doubles appear only at the boundary
// (metrics, field evaluation, LP solving).
//
// Error convention, used across the whole library:
//   std::invalid_argument  caller handed us malformed or out-of-domain data
//                          (the CLI maps this to exit code 2)
//   std::runtime_error     internal failure or resource cap
//                          (the CLI maps this to exit code 1)

#include <gmpxx.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace feller {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms. Throws on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

// Parses "p/q" or "p" with an optional leading minus on p. The denominator
// must be a positive decimal integer; "1/0" and stray characters are
// rejected. This is the one rational literal format accepted from files and
// the command line.
inline Rational parse_rational(std::string_view text) {
  const std::string input(text);
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational literal '" + input + "'");
  };
  std::string_view s = text;
  if (s.empty()) fail();
  std::string num_digits;
  std::string den_digits;
  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '-') {
    negative = true;
    ++i;
  }
  if (i >= s.size() || s[i] < '0' || s[i] > '9') fail();
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') num_digits.push_back(s[i++]);
  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    if (i >= s.size() || s[i] < '0' || s[i] > '9') fail();
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') den_digits.push_back(s[i++]);
    if (i != s.size()) fail();
  } else {
    den_digits = "1";
  }
  Integer num(num_digits, 10);
  Integer den(den_digits, 10);
  if (den == 0) fail();
  if (negative) num = -num;
  return make_rational(num, den);
}

// Always prints the canonical "p/q" form, e.g. "0/1", "1/1", "-3/8".
inline std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// 2^k as an exact rational, k may be negative.
inline Rational pow2(long k) {
  Integer big = Integer(1) << static_cast<unsigned long>(k >= 0 ? k : -k);
  return k >= 0 ? Rational(big) : make_rational(Integer(1), big);
}

inline Integer floor_int(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

// x - floor(x), always in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor_int(q)); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Prints a real with 12 significant digits; integral values keep a ".0" so
// output stays visually typed ("1.0", not "1"). Locale independent.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) {
    bool numeric = !s.empty();
    for (char c : s) {
      if ((c < '0' || c > '9') && c != '-') numeric = false;
    }
    if (numeric) s += ".0";
  }
  return s;
}

}  // namespace feller

#endif  // FELLER_RATIONAL_HPP_
