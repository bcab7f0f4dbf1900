#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "m0n/combinat/restriction.hpp"
#include "m0n/picard/divisor.hpp"

namespace m0n {

/// Pairing of a single generator with an F-curve.
inline int dot(const Symbol& s, const FCurve& f) {
  if (s.is_psi) {
    for (Mask b : f.blocks)
      if (b == label_bit(s.label)) return 1;
    return 0;
  }
  const Mask all = full_mask(f.n);
  const Mask sc = all & ~s.rep;
  for (Mask b : f.blocks)
    if (popcount(b) >= 2 && (b == s.rep || b == sc)) return -1;
  for (int j = 1; j < 4; ++j)
    if ((f.blocks[0] | f.blocks[j]) == s.rep || (f.blocks[0] | f.blocks[j]) == sc) return 1;
  return 0;
}

inline Rational dot(const DivisorClass& d, const FCurve& f) {
  if (d.n() != f.n) throw DomainError("divisor and F-curve live on different n");
  Rational v = 0;
  for (const auto& [s, c] : d.terms()) {
    const int k = dot(s, f);
    if (k) v += k * c;
  }
  return v;
}

inline Rational dot_cycle(const DivisorClass& d, const WeightedCycle& c) {
  if (d.n() != c.n) throw DomainError("divisor and cycle live on different n");
  Rational v = 0;
  for (const auto& [f, w] : c.components) v += w * dot(d, f);
  return v;
}

/// Degree on M_{0,4}, where every boundary point and every psi has degree 1.
inline Rational degree_m04(const DivisorClass& d) {
  if (d.n() != 4) throw DomainError("degree is only defined on M_{0,4}");
  Rational v = 0;
  for (const auto& [s, c] : d.terms()) v += c;
  return v;
}

/// nu^* D on M_{0,m}. Points on attached tails contribute no psi.
inline DivisorClass pullback(const DivisorClass& d, const BoundaryRestriction& nu) {
  if (d.n() != nu.n) throw DomainError("restriction targets n = " + std::to_string(nu.n) + ", divisor has n = " + std::to_string(d.n()));
  const int m = nu.m();
  if (m < 4) throw DomainError("pullback needs a source with at least 4 points");
  const Mask all = full_mask(nu.n);
  DivisorClass out(m);
  for (const auto& [s, c] : d.terms()) {
    if (s.is_psi) {
      const int x = nu.position_of(s.label);
      if (nu.block_size(x) == 1) out.add_psi(x, c);
      continue;
    }
    const Mask t = s.rep, tc = all & ~t;
    Mask inside = 0;
    for (int x = 1; x <= m; ++x) {
      const Mask b = nu.blocks[x - 1];
      if ((b & ~t) == 0) inside |= label_bit(x);
      if (popcount(b) >= 2 && (b == t || b == tc)) out.add_psi(x, -c);
    }
    if (nu.image(inside) == t) {
      const int k = popcount(inside);
      if (k >= 2 && m - k >= 2) out.add_delta(inside, c);
    }
  }
  return out;
}

/// pi_p^* for the map M_{0,n} -> M_{0,n-1} forgetting point p; the labels of
/// the target are {1..n} \ {p} renumbered in increasing order.
inline DivisorClass forget_pullback(const DivisorClass& d, int p) {
  const int n = d.n() + 1;
  if (p < 1 || p > n) throw DomainError("forgotten point out of range");
  auto lift_label = [p](int l) { return l < p ? l : l + 1; };
  auto lift = [&](Mask s) {
    Mask out = 0;
    for (int l : labels_of(s)) out |= label_bit(lift_label(l));
    return out;
  };
  DivisorClass out(n);
  for (const auto& [s, c] : d.terms()) {
    if (s.is_psi) {
      const int i = lift_label(s.label);
      out.add_psi(i, c);
      out.add_delta(label_bit(i) | label_bit(p), -c);
    } else {
      const Mask t = lift(s.rep);
      out.add_delta(t, c);
      out.add_delta(t | label_bit(p), c);
    }
  }
  return out;
}

/// Pullback along forgetting several points (labels in the numbering of M_{0,n}).
inline DivisorClass forget_pullback(const DivisorClass& d, std::vector<int> points) {
  std::sort(points.begin(), points.end());
  DivisorClass out = d;
  for (int p : points) out = forget_pullback(out, p);
  return out;
}

}  // namespace m0n
