#pragma once

#include <optional>
#include <string>
#include <vector>

#include "m0n/chambers6/bigness.hpp"
#include "m0n/chambers6/decompose.hpp"

namespace m0n {

enum class FibrationTag { trivial, big, forget_one, forget_two, forget_pair_pair, unknown };

inline const char* to_string(FibrationTag t) {
  switch (t) {
    case FibrationTag::trivial: return "trivial";
    case FibrationTag::big: return "big";
    case FibrationTag::forget_one: return "forget_one";
    case FibrationTag::forget_two: return "forget_two";
    case FibrationTag::forget_pair_pair: return "forget_pair_pair";
    case FibrationTag::unknown: return "unknown";
  }
  return "?";
}

/// D = x * pi_b^* E_a + y * pi_a^* E_b on five points, x, y > 0.
struct ProductPullback {
  int a = 0, b = 0;
  Rational x, y;
};

struct FibrationClass {
  FibrationTag tag = FibrationTag::unknown;
  std::vector<int> points;          // forgotten points, original labels
  std::vector<Mask> pairs;          // forget_pair_pair: forgotten pairs
  std::vector<Rational> weights;    // forget_pair_pair: alpha, beta
  std::optional<DivisorClass> image;        // forget_one / forget_two: E with D = pi^* E
  std::optional<BoundaryCombination> image_presentation;
  std::optional<BigWitness> witness;
  std::optional<ProductPullback> product;
  std::string note;

  std::string str() const {
    std::string s = to_string(tag);
    if (tag == FibrationTag::forget_one || tag == FibrationTag::forget_two) {
      s += "(";
      for (std::size_t k = 0; k < points.size(); ++k) s += (k ? "," : "") + std::to_string(points[k]);
      s += ")";
    }
    if (tag == FibrationTag::forget_pair_pair) s += "(" + subset_string(pairs[0]) + "," + subset_string(pairs[1]) + ")";
    return s;
  }
};

namespace detail {

/// E on n - 1 points with pi_i^* E equivalent to D, if any.
inline std::optional<DivisorClass> descend(const DivisorClass& d, int i) {
  const int n = d.n();
  const auto& up = pic_context(n);
  const auto& down = pic_context(n - 1);
  RatMatrix a(up.dim(), down.dim());
  for (std::size_t k = 0; k < down.dim(); ++k) {
    const RatVector col = up.normal_form(forget_pullback(DivisorClass(n - 1).add(down.basis()[k], 1), i));
    for (std::size_t r = 0; r < col.size(); ++r) a(r, k) = col[r];
  }
  const auto sol = solve_linear(a, up.normal_form(d));
  if (!sol.consistent) return std::nullopt;
  if (!sol.kernel.empty()) throw InternalError("forgetful pullback is not injective");
  return down.from_coords(sol.particular);
}

inline DivisorClass point_class_m04() { return DivisorClass(4).add_delta(mask_of({1, 2}), 1); }

/// Coefficients (x, y) with D = x * P + y * Q in Pic, if they exist.
inline std::optional<std::pair<Rational, Rational>> solve_two(const DivisorClass& d, const DivisorClass& p, const DivisorClass& q) {
  const auto& ctx = pic_context(d.n());
  const RatVector vp = ctx.normal_form(p), vq = ctx.normal_form(q);
  RatMatrix a(ctx.dim(), 2);
  for (std::size_t r = 0; r < ctx.dim(); ++r) {
    a(r, 0) = vp[r];
    a(r, 1) = vq[r];
  }
  const auto sol = solve_linear(a, ctx.normal_form(d));
  if (!sol.consistent || !sol.kernel.empty()) return std::nullopt;
  return std::make_pair(sol.particular[0], sol.particular[1]);
}

}  // namespace detail

inline FibrationClass classify_fibration(const DivisorClass& d) {
  const int n = d.n();
  if (n != 5 && n != 6) throw DomainError("fibrations are classified for n = 5 and n = 6, got n = " + std::to_string(n));
  detail::require_fnef(d);
  FibrationClass out;
  const auto& ctx = pic_context(n);
  if (is_zero(ctx.normal_form(d))) {
    out.tag = FibrationTag::trivial;
    return out;
  }
  std::optional<ZetaTable> z;
  if (n == 6) z = zeta(d);

  for (int i = 1; i <= n; ++i) {
    auto e = detail::descend(d, i);
    if (n == 6) {
      bool all_zero = true;
      for (int j = 1; j <= 6; ++j)
        if (j != i && sgn(z->pair.at(label_bit(i) | label_bit(j))) != 0) all_zero = false;
      if (all_zero != e.has_value())
        throw InternalError("vanishing of zeta_" + std::to_string(i) + "j disagrees with descent along pi_" + std::to_string(i));
    }
    if (!e) continue;
    out.points = {i};
    out.image = *e;
    if (n == 5) {
      const Rational deg = degree_m04(*e);
      if (sgn(deg) <= 0) throw InternalError("descended class on M_{0,4} is not positive");
      out.tag = FibrationTag::forget_one;
      BoundaryCombination pres{4, {}};
      pres.add(BoundaryClass(4, mask_of({1, 2})), deg);
      out.image_presentation = pres;
      return out;
    }
    const FibrationClass below = classify_fibration(*e);
    out.image_presentation = present(*e);
    if (below.tag == FibrationTag::forget_one) {
      const int j = below.points[0];
      out.tag = FibrationTag::forget_two;
      out.points = {i, j < i ? j : j + 1};
      std::sort(out.points.begin(), out.points.end());
    } else if (below.tag == FibrationTag::big) {
      out.tag = FibrationTag::forget_one;
    } else {
      throw InternalError("descended class classified as " + below.str());
    }
    return out;
  }

  if (n == 6) {
    std::vector<Mask> zero;
    for (const auto& [t, v] : z->triple)
      if (sgn(v) == 0) zero.push_back(t);
    if (zero.size() > 2) throw InternalError("nontrivial F-nef divisor with more than two vanishing triple coefficients");
    if (zero.size() == 2) {
      const Mask p1 = zero[0] & ~1u, p2 = zero[1] & ~1u;
      if (p1 & p2) throw InternalError("vanishing triple coefficients on overlapping triples");
      const DivisorClass pt = detail::point_class_m04();
      const auto xy = detail::solve_two(d, forget_pullback(pt, labels_of(p2)), forget_pullback(pt, labels_of(p1)));
      if (!xy || sgn(xy->first) <= 0 || sgn(xy->second) <= 0)
        throw InternalError("two vanishing triple coefficients without a pair-pair pullback");
      out.tag = FibrationTag::forget_pair_pair;
      out.pairs = {p2, p1};
      out.weights = {xy->first / 3, xy->second / 3};
      return out;
    }
  }

  out.tag = FibrationTag::big;
  if (n == 5) {
    const BoundaryCombination pres = present(d);
    for (Mask ab : k_subsets(full_mask(5), 2)) {
      if (sgn(pres.coefficient(BoundaryClass(5, ab))) != 0) continue;
      const auto l = labels_of(ab);
      const Mask rest = full_mask(5) & ~ab;
      DivisorClass d1(5), d2(5);
      for (Mask pq : k_subsets(rest, 2)) {
        d1.add_delta(pq, 1);
        d2.add_delta(pq, 1);
      }
      for (int p : labels_of(rest)) {
        d1.add_delta(label_bit(l[0]) | label_bit(p), 1);
        d2.add_delta(label_bit(l[1]) | label_bit(p), 1);
      }
      if (auto xy = detail::solve_two(d, d1, d2); xy && sgn(xy->first) > 0 && sgn(xy->second) > 0) {
        out.product = ProductPullback{l[0], l[1], xy->first, xy->second};
        return out;
      }
    }
    out.witness = big_witness(pres);
  } else {
    out.witness = big_witness(decompose_effective(d).decomposition.combination);
  }
  if (!out.witness) {
    out.tag = FibrationTag::unknown;
    out.note = "unknown: bigness claimed by the classification but no pattern witness located";
  }
  return out;
}

}  // namespace m0n
