#pragma once

// Brute-force evaluation of the six-point coordinate sums I, O, Sigma and b
// straight from the normal form, for checking closed intersection formulas.

#include <map>
#include <random>
#include <set>

#include "m0n/picard/context.hpp"

namespace oracle {

using m0n::Mask;
using m0n::Rational;

inline m0n::DivisorClass random_divisor(int n, std::mt19937& gen) {
  std::uniform_int_distribution<int> c(-5, 5);
  m0n::DivisorClass d(n);
  for (int i = 1; i <= n; ++i) d.add_psi(i, m0n::rat(c(gen), 1 + gen() % 3));
  for (const auto& b : m0n::boundary_classes(n)) d.add_delta(b, m0n::rat(c(gen), 1 + gen() % 4));
  return d;
}

/// D = sum c_i psi_i - sum b_S delta_S over the triple classes.
struct Six {
  Rational c[7];
  std::map<Mask, Rational> b;  // keyed by both sides

  explicit Six(const m0n::DivisorClass& d) {
    const auto& ctx = m0n::pic_context(6);
    const auto v = ctx.normal_form(d);
    for (std::size_t k = 0; k < v.size(); ++k) {
      const auto& s = ctx.basis()[k];
      if (s.is_psi) {
        c[s.label] = v[k];
      } else {
        b[s.rep] = -v[k];
        b[0x3f & ~s.rep] = -v[k];
      }
    }
  }
  Rational I(Mask t) const {
    Rational r = 0;
    for (int i = 1; i <= 6; ++i)
      if (t >> (i - 1) & 1) r += c[i];
    return r;
  }
  Rational O(Mask t) const { return I(0x3f & ~t); }
  Rational IO() const { return I(0x3f); }
  Rational bt(Mask t) const {
    auto it = b.find(t);
    return it == b.end() ? Rational(0) : it->second;
  }
  /// Sum of b over A in T with |A| = j and B outside with |B| = i, each class once.
  Rational sigma(Mask t, int i, int j) const {
    std::set<Mask> seen;
    Rational r = 0;
    for (Mask s = 1; s < 0x3f; ++s) {
      if (__builtin_popcount(s) != 3) continue;
      if (__builtin_popcount(s & t) != j || __builtin_popcount(s & ~t) != i) continue;
      const Mask key = (s & 1) ? s : (0x3f & ~s);
      if (seen.insert(key).second) r += bt(s);
    }
    return r;
  }
};

}  // namespace oracle
