#pragma once

#include <optional>
#include <string>

#include "m0n/chambers6/zeta.hpp"
#include "m0n/intersect/fnef.hpp"

namespace m0n {

struct SixDecomposition {
  EffectiveDecomposition decomposition;
  std::optional<Mask> negative_triple;  // set on the big branch
  Rational rho;
  BoundaryCombination b_part;  // the class B_{1ij} on the big branch
};

namespace detail {

inline void require_fnef(const DivisorClass& d) {
  const auto r = fnef(d);
  if (!r.nef) throw PreconditionError("divisor is not F-nef: " + r.witness->str() + " pairs to " + to_string(r.value));
}

}  // namespace detail

/// Nonnegative boundary expression of an F-nef divisor on six points.
inline SixDecomposition decompose_effective(const DivisorClass& d) {
  if (d.n() != 6) throw DomainError("decompose_effective works on six points");
  detail::require_fnef(d);
  const ZetaTable z = zeta(d);
  const auto neg = z.negative_triples();
  const SixCoords x(d);
  SixDecomposition out{{d, {6, {}}}, std::nullopt, x.rho(), {6, {}}};
  auto& comb = out.decomposition.combination;
  if (neg.size() > 1) throw InternalError("F-nef divisor with " + std::to_string(neg.size()) + " negative triple coefficients");
  if (neg.empty()) {
    comb = present(d);
  } else {
    const Mask t = neg.front();
    const Rational zt = z.triple.at(t);
    const Rational rho = out.rho;
    if (sgn(rho) <= 0 || zt < -rho / 6)
      throw InternalError("negative triple coefficient " + to_string(zt) + " outside (-rho/6, 0) with rho = " + to_string(rho));
    out.negative_triple = t;
    const auto tl = labels_of(t & ~1u);  // i, j
    const Rational c1t = dot_cycle(d, family(6, Family::c_1ab_1, labels_of(t)));
    for (Mask ab : six_pairs()) {
      const auto l = labels_of(ab);
      const Rational c1 = dot_cycle(d, family(6, Family::c_ab_1, {l[0], l[1]}));
      const BoundaryClass cls(6, ab);
      if (popcount(ab & t) == 1) {
        comb.add(cls, rat(1, 6) * c1t + rat(2, 3) * c1);
        out.b_part.add(cls, rat(3, 10) * rat(5, 27) * rho);
      } else {
        comb.add(cls, pair_curve_value(d, ab));
        out.b_part.add(cls, rat(3, 10) * (-zt / 3));
      }
    }
    for (Mask s : six_triples()) {
      if (s == t) continue;
      const auto l = labels_of(s & ~1u);
      const BoundaryClass cls(6, s);
      comb.add(cls, rat(2, 3) * dot_cycle(d, family(6, Family::c_small_ab, {tl[0], tl[1], l[0], l[1]})));
      out.b_part.add(cls, rat(3, 10) * (2 * rho - 8 * zt) / 9);
    }
    for (const auto& [cls, c] : out.b_part.coeffs) {
      if (sgn(c) <= 0) throw InternalError("B_1ij coefficient on delta" + cls.str() + " is not positive");
      comb.add(cls, c);
    }
  }
  if (auto err = check_decomposition(pic_context(6), out.decomposition)) throw InternalError("six-point decomposition: " + *err);
  return out;
}

/// Position of an F-nef divisor among the eleven closed subcones.
struct ChamberReport {
  ZetaTable zeta;
  std::optional<Mask> triple;       // empty for the central subcone
  bool in_central = false;          // closed central subcone contains D
  std::vector<Mask> closure_triples;  // triple subcones whose closure contains D
  std::vector<Mask> vanishing;      // all zeta equal to 0

  std::string label() const { return triple ? subset_string(*triple) : "central"; }
  bool on_face() const { return (in_central ? 1 : 0) + closure_triples.size() > 1; }
};

inline ChamberReport chamber(const DivisorClass& d) {
  if (d.n() != 6) throw DomainError("chambers are defined on six points");
  detail::require_fnef(d);
  ChamberReport r{zeta(d), std::nullopt, true, {}, {}};
  for (const auto& [t, v] : r.zeta.triple) {
    if (sgn(v) < 0) {
      r.in_central = false;
      r.triple = t;
    }
    if (sgn(v) <= 0) r.closure_triples.push_back(t);
  }
  r.vanishing = r.zeta.vanishing();
  return r;
}

}  // namespace m0n
