#pragma once

#include <array>
#include <set>

#include "m0n/intersect/families.hpp"
#include "m0n/picard/named.hpp"

namespace m0n {

/// D = sum c_i psi_i - sum b_T delta_T (T running over the ten triple classes),
/// read off the normal form on six points.
class SixCoords {
 public:
  explicit SixCoords(const DivisorClass& d) {
    if (d.n() != 6) throw DomainError("six-point coordinates need n = 6, got " + std::to_string(d.n()));
    const auto& ctx = pic_context(6);
    const RatVector v = ctx.normal_form(d);
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Symbol& s = ctx.basis()[k];
      if (s.is_psi)
        c_[s.label] = v[k];
      else
        b_[s.rep] = -v[k];
    }
  }

  const Rational& c(int i) const { return c_.at(i); }
  /// b of the triple class containing T (either side).
  Rational b(Mask t) const {
    if (popcount(t) != 3) throw DomainError("b is indexed by triples, got " + subset_string(t));
    return b_[BoundaryClass(6, t).rep];
  }
  Rational I(Mask t) const {
    Rational r = 0;
    for (int i : labels_of(t)) r += c_[i];
    return r;
  }
  Rational O(Mask t) const { return I(full_mask(6) & ~t); }
  /// I + O, the same for every T.
  Rational IO() const { return I(full_mask(6)); }
  /// Sum of b_{A u B} over A in T (|A| = j) and B outside (|B| = i), each class once.
  Rational sigma(Mask t, int i, int j) const {
    std::set<BoundaryClass> seen;
    const Mask tc = full_mask(6) & ~t;
    if (j < 0 || i < 0 || j > popcount(t) || i > popcount(tc)) return 0;
    for (Mask a : k_subsets(t, j))
      for (Mask bb : k_subsets(tc, i))
        if (popcount(a | bb) == 3) seen.insert(BoundaryClass(6, a | bb));
    Rational r = 0;
    for (const auto& x : seen) r += b_[x.rep];
    return r;
  }
  /// Sigma^{abc} = Sigma_1^{abc,2}.
  Rational sigma_triple(Mask t) const { return sigma(t, 1, 2); }
  /// Sigma^{abc} + b_{abc}: the sum of all ten b's.
  Rational sigma_all() const {
    Rational r = 0;
    for (const auto& x : b_) r += x;
    return r;
  }
  Rational rho() const { return -(IO() + sigma_all()); }

 private:
  std::array<Rational, 7> c_;
  mutable std::array<Rational, 64> b_;
};

/// The 15 pairs and the 10 triple classes (by their 1-containing side).
inline const std::vector<Mask>& six_pairs() {
  static const std::vector<Mask> v = k_subsets(full_mask(6), 2);
  return v;
}

inline const std::vector<Mask>& six_triples() {
  static const std::vector<Mask> v = [] {
    std::vector<Mask> out;
    for (Mask s : k_subsets(mask_of({2, 3, 4, 5, 6}), 2)) out.push_back(s | 1u);
    return out;
  }();
  return v;
}

}  // namespace m0n
