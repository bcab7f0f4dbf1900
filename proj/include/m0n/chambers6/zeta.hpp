#pragma once

#include <map>

#include "m0n/chambers6/coords.hpp"
#include "m0n/picard/effective.hpp"

namespace m0n {

/// (10/3) D = sum zeta_ab delta_ab + sum zeta_1ab delta_1ab on six points.
struct ZetaTable {
  std::map<Mask, Rational> pair;    // 15 pairs
  std::map<Mask, Rational> triple;  // 10 triples, 1-containing side

  Rational at(Mask s) const {
    if (popcount(s) == 2) return pair.at(s);
    return triple.at(BoundaryClass(6, s).rep);
  }
  std::vector<Mask> negative_triples() const {
    std::vector<Mask> out;
    for (const auto& [t, z] : triple)
      if (sgn(z) < 0) out.push_back(t);
    return out;
  }
  std::vector<Mask> vanishing() const {
    std::vector<Mask> out;
    for (const auto& [s, z] : pair)
      if (sgn(z) == 0) out.push_back(s);
    for (const auto& [s, z] : triple)
      if (sgn(z) == 0) out.push_back(s);
    return out;
  }
};

inline Rational pair_curve_value(const DivisorClass& d, Mask ab) {
  const auto l = labels_of(ab);
  return rat(2, 5) * dot_cycle(d, family(6, Family::c_ab_1, {l[0], l[1]})) +
         rat(1, 5) * dot_cycle(d, family(6, Family::c_ab_2, {l[0], l[1]}));
}

inline Rational triple_curve_value(const DivisorClass& d, const SixCoords& x, Mask t) {
  const auto l = labels_of(t);
  const std::vector<int> p{l[0], l[1], l[2]};
  return rat(7, 10) * dot_cycle(d, family(6, Family::c_1ab_1, p)) +
         rat(1, 15) * (dot_cycle(d, family(6, Family::c_1ab_2, p)) + dot_cycle(d, family(6, Family::c_1ab_3, p))) +
         rat(4, 135) * x.sigma_triple(t);
}

/// Coefficient formulas, cross-checked against the curve-pairing form.
inline ZetaTable zeta(const DivisorClass& d) {
  if (d.n() != 6) throw DomainError("zeta is defined on six points, got n = " + std::to_string(d.n()));
  const SixCoords x(d);
  ZetaTable z;
  const Rational ten_thirds = rat(10, 3);
  for (Mask ab : six_pairs()) {
    Rational v = 2 * x.I(ab) + x.O(ab) / 3 + x.sigma(ab, 1, 2) / 3 - rat(2, 9) * x.sigma(ab, 2, 1);
    if (v != ten_thirds * pair_curve_value(d, ab))
      throw InternalError("zeta" + subset_string(ab) + " disagrees with its curve form");
    z.pair[ab] = v;
  }
  for (Mask t : six_triples()) {
    Rational v = x.IO() - rat(20, 9) * x.b(t) - x.sigma_all() / 9;
    if (v != ten_thirds * triple_curve_value(d, x, t))
      throw InternalError("zeta" + subset_string(t) + " disagrees with its curve form");
    z.triple[t] = v;
  }
  return z;
}

/// Boundary presentation with curve-pairing coefficients on five or six points,
/// verified in Pic before it is returned.
inline BoundaryCombination present(const DivisorClass& d) {
  BoundaryCombination out{d.n(), {}};
  if (d.n() == 5) {
    for (Mask ab : k_subsets(full_mask(5), 2)) {
      const auto l = labels_of(ab);
      out.add(BoundaryClass(5, ab), rat(1, 6) * dot_cycle(d, family(5, Family::c_ab, {l[0], l[1]})));
    }
  } else if (d.n() == 6) {
    const SixCoords x(d);
    for (Mask ab : six_pairs()) out.add(BoundaryClass(6, ab), pair_curve_value(d, ab));
    for (Mask t : six_triples()) out.add(BoundaryClass(6, t), triple_curve_value(d, x, t));
  } else {
    throw DomainError("canonical presentations exist for n = 5 and n = 6, got n = " + std::to_string(d.n()));
  }
  if (!pic_context(d.n()).equivalent(out.divisor(), d)) throw InternalError("canonical presentation does not reproduce D");
  return out;
}

}  // namespace m0n
