#pragma once

#include <map>
#include <optional>
#include <string>

#include "m0n/picard/context.hpp"

namespace m0n {

/// Rational combination of boundary classes.
struct BoundaryCombination {
  int n = 0;
  std::map<BoundaryClass, Rational> coeffs;

  void add(const BoundaryClass& b, const Rational& c) {
    if (sgn(c) == 0) return;
    auto& x = coeffs[b];
    x += c;
    if (sgn(x) == 0) coeffs.erase(b);
  }
  DivisorClass divisor() const {
    DivisorClass d(n);
    for (const auto& [b, c] : coeffs) d.add_delta(b, c);
    return d;
  }
  bool nonnegative() const {
    for (const auto& [b, c] : coeffs)
      if (sgn(c) < 0) return false;
    return true;
  }
  Rational coefficient(const BoundaryClass& b) const {
    auto it = coeffs.find(b);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
};

struct EffectiveDecomposition {
  DivisorClass target;
  BoundaryCombination combination;
};

/// Independent check: nonnegative coefficients and equality in Pic.
inline std::optional<std::string> check_decomposition(const PicContext& ctx, const EffectiveDecomposition& e) {
  if (e.combination.n != e.target.n() || e.target.n() != ctx.n()) return "decomposition lives on the wrong n";
  for (const auto& [b, c] : e.combination.coeffs)
    if (sgn(c) < 0) return "negative coefficient on delta" + b.str();
  if (!ctx.equivalent(e.combination.divisor(), e.target)) return "combination is not equivalent to the target";
  return std::nullopt;
}

}  // namespace m0n
