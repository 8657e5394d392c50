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

#ifndef FELLER_SVC_HPP_
#define FELLER_SVC_HPP_

// Fat Cantor construction on [-2,-1] with exact rational endpoints: at
// level n each kept interval loses an open middle of length 4^{-n}, so the
// kept intervals at level n all have length (2^n + 1) / (2 * 4^n) and the
// kept set keeps total length 1/2 + 2^{-(n+1)}. On each removed interval
// (a, b) of level n the jump map is the downward parabola
//   (4^{2n+1} / n) * (b - x) * (x - a),
// which peaks at exactly 1/n over the midpoint and vanishes at the ends.
// Points never removed map to 0.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "feller/rational.hpp"

namespace feller {

inline constexpr int kMaxSvcDepth = 30;

enum class SvcStatus {
  kRemoved,      // strictly inside a removed interval of some built level
  kKeptAtDepth,  // inside a kept interval at the tree's full depth
};

struct SvcClassification {
  SvcStatus status = SvcStatus::kKeptAtDepth;
  int level = 0;   // removed: the level of the removed interval; kept: tree depth
  long index = 0;  // 1-based interval index within that level
};

struct SvcInterval {
  Rational a;
  Rational b;
};

class SvcTree {
 public:
  // Builds levels 0..depth. kept()[n] holds the 2^n kept intervals of
  // level n; removed()[n] holds the 2^{n-1} open middles removed at level
  // n (removed()[0] is empty).
  static SvcTree build(int depth) {
    if (depth < 0 || depth > kMaxSvcDepth) {
      throw std::invalid_argument("tree depth must lie in [0, " +
                                  std::to_string(kMaxSvcDepth) + "]");
    }
    SvcTree tree;
    tree.depth_ = depth;
    tree.kept_.resize(depth + 1);
    tree.removed_.resize(depth + 1);
    tree.kept_[0] = {SvcInterval{Rational(-2), Rational(-1)}};
    for (int n = 1; n <= depth; ++n) {
      const Rational gap = pow2(-2 * n);  // 4^{-n}
      tree.kept_[n].reserve(std::size_t(1) << n);
      tree.removed_[n].reserve(std::size_t(1) << (n - 1));
      for (const SvcInterval& parent : tree.kept_[n - 1]) {
        const Rational keep = (parent.b - parent.a - gap) / 2;
        const Rational u = parent.a + keep;
        const Rational v = u + gap;
        tree.removed_[n].push_back(SvcInterval{u, v});
        tree.kept_[n].push_back(SvcInterval{parent.a, u});
        tree.kept_[n].push_back(SvcInterval{v, parent.b});
      }
    }
    return tree;
  }

  int depth() const { return depth_; }
  const std::vector<std::vector<SvcInterval>>& kept() const { return kept_; }
  const std::vector<std::vector<SvcInterval>>& removed() const { return removed_; }

  // Walks the kept chain of x down the tree. Removed intervals are open:
  // their endpoints classify as kept.
  SvcClassification classify(const Rational& x) const {
    if (x < -2 || x > -1) {
      throw std::invalid_argument("point " + format_rational(x) + " outside [-2,-1]");
    }
    long index = 1;
    for (int n = 1; n <= depth_; ++n) {
      const SvcInterval& middle = removed_[n][static_cast<std::size_t>(index - 1)];
      if (x > middle.a && x < middle.b) {
        return SvcClassification{SvcStatus::kRemoved, n, index};
      }
      index = x <= middle.a ? 2 * index - 1 : 2 * index;
    }
    return SvcClassification{SvcStatus::kKeptAtDepth, depth_, index};
  }

  // Exact total length of the kept intervals at a level.
  Rational kept_total(int level) const {
    if (level < 0 || level > depth_) throw std::invalid_argument("level out of range");
    Rational sum(0);
    for (const SvcInterval& iv : kept_[static_cast<std::size_t>(level)]) sum += iv.b - iv.a;
    return sum;
  }

 private:
  SvcTree() = default;
  int depth_ = 0;
  std::vector<std::vector<SvcInterval>> kept_;
  std::vector<std::vector<SvcInterval>> removed_;
};

// Peak value of the level-n jump parabola: exactly 1/n.
inline Rational svc_bump_peak(int n) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  return make_rational(1, n);
}

struct SvcMapResult {
  Rational value;        // 0 when not removed at any built level
  bool exact = false;    // true when the value is certified, not truncated
  SvcClassification cls;
  Rational error_bound;  // 0 when exact; else 1/(depth+1)
};

// Jump map on [-2,-1]. Removed points get the exact parabola value. Points
// kept at the full depth get 0; that is exact only for points provably in
// the limit set, which the tree can certify for endpoints of kept
// intervals. Otherwise the true value is below the next level's peak, so
// the error is at most 1/(depth+1).
inline SvcMapResult svc_map(const SvcTree& tree, const Rational& x) {
  SvcMapResult out;
  out.cls = tree.classify(x);
  if (out.cls.status == SvcStatus::kRemoved) {
    const SvcInterval& iv =
        tree.removed()[static_cast<std::size_t>(out.cls.level)]
                      [static_cast<std::size_t>(out.cls.index - 1)];
    const Rational scale =
        make_rational(Integer(1) << static_cast<unsigned long>(4 * out.cls.level + 2),
                      Integer(out.cls.level));  // 4^{2n+1} / n
    out.value = scale * (iv.b - x) * (x - iv.a);
    out.exact = true;
    out.error_bound = Rational(0);
    return out;
  }
  const SvcInterval& iv = tree.kept()[static_cast<std::size_t>(out.cls.level)]
                                     [static_cast<std::size_t>(out.cls.index - 1)];
  out.value = Rational(0);
  out.exact = (x == iv.a || x == iv.b);  // endpoints survive every level
  out.error_bound = out.exact ? Rational(0) : make_rational(1, tree.depth() + 1);
  return out;
}

}  // namespace feller

#endif  // FELLER_SVC_HPP_
