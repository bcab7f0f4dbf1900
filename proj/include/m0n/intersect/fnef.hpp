#pragma once

#include <optional>

#include "m0n/intersect/pairing.hpp"
#include "m0n/picard/invariant.hpp"

namespace m0n {

struct FNefResult {
  bool nef = true;
  std::optional<FCurve> witness;  // first strictly negative curve
  Rational value;                 // its pairing
  std::size_t checked = 0;        // curves (or orbit representatives) examined
};

/// Checks every F-curve; the witness is the first negative one in enumeration order.
inline FNefResult fnef(const DivisorClass& d) {
  FNefResult r;
  for (const auto& f : fcurves(d.n())) {
    ++r.checked;
    Rational v = dot(d, f);
    if (sgn(v) < 0) return {false, f, v, r.checked};
  }
  return r;
}

/// Class invariance for n <= 10; beyond that the formal coefficients must be
/// invariant, which is sufficient but not necessary.
inline void require_group_invariant(const DivisorClass& d, const SymmetryGroup& g) {
  if (g.n() != d.n()) throw DomainError("group and divisor disagree on n");
  if (d.n() <= kMaxContextN) {
    require_invariant(pic_context(d.n()), d, g);
    return;
  }
  for (auto [a, b] : g.generators())
    if (!(transpose_labels(d, a, b) == d)) {
      const std::string element = "(" + std::to_string(a) + " " + std::to_string(b) + ")";
      throw InvarianceError("coefficients are not invariant under " + g.name() + ": moved by " + element, element);
    }
}

/// F-nef test over orbit representatives of a group fixing D.
inline FNefResult fnef(const DivisorClass& d, const SymmetryGroup& g) {
  require_group_invariant(d, g);
  FNefResult r;
  for (const auto& [f, size] : g.fcurve_orbits()) {
    ++r.checked;
    Rational v = dot(d, f);
    if (sgn(v) < 0) return {false, f, v, r.checked};
  }
  return r;
}

}  // namespace m0n
