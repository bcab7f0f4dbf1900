#pragma once

#include <string>
#include <utility>
#include <vector>

#include "m0n/combinat/fcurve.hpp"
#include "m0n/exactla/rational.hpp"

namespace m0n {

/// nu: M_{0,m} -> M_{0,n}. Point x (1-based) of M_{0,m} carries blocks[x-1].
struct BoundaryRestriction {
  int n = 0;
  std::vector<Mask> blocks;

  int m() const { return static_cast<int>(blocks.size()); }
  int block_size(int x) const { return popcount(blocks[x - 1]); }
  /// Position carrying `label`.
  int position_of(int label) const {
    for (int x = 1; x <= m(); ++x)
      if (has_label(blocks[x - 1], label)) return x;
    throw DomainError("label " + std::to_string(label) + " not covered");
  }
  /// Union of the blocks at the positions in `positions` (a subset of {1..m}).
  Mask image(Mask positions) const {
    Mask out = 0;
    for (int x : labels_of(positions)) out |= blocks[x - 1];
    return out;
  }
  std::string str() const {
    std::string s = "(";
    for (int x = 0; x < m(); ++x) s += (x ? "," : "") + subset_string(blocks[x]);
    return s + ")";
  }
  bool operator==(const BoundaryRestriction& o) const { return n == o.n && blocks == o.blocks; }
};

inline BoundaryRestriction restriction(int n, std::vector<Mask> blocks) {
  check_n(n);
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw DomainError("restriction block is empty");
    if (seen & b) throw DomainError("restriction blocks overlap");
    seen |= b;
  }
  if (seen != full_mask(n)) throw DomainError("restriction blocks do not cover {1..n}");
  if (blocks.size() < 3) throw DomainError("a boundary restriction needs at least 3 blocks");
  return {n, std::move(blocks)};
}

inline BoundaryRestriction restriction(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Mask> masks;
  for (const auto& b : blocks) {
    Mask s = mask_of(b);
    if (popcount(s) != static_cast<int>(b.size())) throw DomainError("repeated label in restriction block");
    masks.push_back(s);
  }
  return restriction(n, std::move(masks));
}

inline BoundaryRestriction as_restriction(const FCurve& f) {
  return restriction(f.n, std::vector<Mask>(f.blocks.begin(), f.blocks.end()));
}

/// outer o inner, flattened into a single restriction M_{0,inner.m} -> M_{0,outer.n}.
inline BoundaryRestriction compose(const BoundaryRestriction& outer, const BoundaryRestriction& inner) {
  if (inner.n != outer.m())
    throw DomainError("cannot compose: inner restriction targets n = " + std::to_string(inner.n) + ", outer has m = " +
                      std::to_string(outer.m()));
  std::vector<Mask> blocks;
  for (Mask b : inner.blocks) blocks.push_back(outer.image(b));
  return restriction(outer.n, std::move(blocks));
}

/// Positive rational combination of F-curves.
struct WeightedCycle {
  int n = 0;
  std::vector<std::pair<FCurve, Rational>> components;

  void add(const FCurve& f, const Rational& w) {
    if (f.n != n) throw DomainError("cycle component on the wrong n");
    if (sgn(w) <= 0) throw DomainError("cycle weights must be positive");
    components.emplace_back(f, w);
  }
  WeightedCycle& operator+=(const WeightedCycle& o) {
    for (const auto& [f, w] : o.components) add(f, w);
    return *this;
  }
  WeightedCycle scaled(const Rational& s) const {
    WeightedCycle c{n, {}};
    for (const auto& [f, w] : components) c.add(f, w * s);
    return c;
  }
};

}  // namespace m0n
