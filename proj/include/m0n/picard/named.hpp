#pragma once

#include <set>
#include <string>
#include <vector>

#include "m0n/picard/context.hpp"

namespace m0n {

inline DivisorClass psi_class(int n, int i) { return DivisorClass(n).add_psi(i, 1); }

inline DivisorClass delta_class(int n, Mask s) { return DivisorClass(n).add_delta(s, 1); }

/// kappa_1 = sum over classes of (s-1)(n-s-1)/(n-1) delta_S, s the small side.
inline DivisorClass kappa1(int n) {
  DivisorClass d(n);
  for (const auto& b : boundary_classes(n)) {
    const long s = b.size();
    d.add_delta(b, rat((s - 1) * (n - s - 1), n - 1));
  }
  return d;
}

/// B_i: every class whose small side has i elements, each once (2 <= i <= n/2).
inline DivisorClass b_class(int n, int i) {
  if (i < 2 || 2 * i > n) throw DomainError("B_i needs 2 <= i <= n/2, got i = " + std::to_string(i));
  DivisorClass d(n);
  for (const auto& b : boundary_classes(n))
    if (b.size() == i) d.add_delta(b, 1);
  return d;
}

inline DivisorClass total_boundary(int n) {
  DivisorClass d(n);
  for (const auto& b : boundary_classes(n)) d.add_delta(b, 1);
  return d;
}

/// Coefficient of B_j in the canonical class.
inline Rational canonical_b_coefficient(int n, int j) { return rat(static_cast<long>(j) * (n - j), n - 1) - 2; }

inline DivisorClass canonical_class(int n) {
  DivisorClass d(n);
  for (int j = 2; 2 * j <= n; ++j) d += canonical_b_coefficient(n, j) * b_class(n, j);
  return d;
}

namespace detail {

inline void check_pattern(int n, Mask s, int a, int b) {
  check_n(n);
  const Mask all = full_mask(n);
  if (s == 0 || (s & ~all) != 0) throw DomainError("pattern set " + subset_string(s) + " invalid for n = " + std::to_string(n));
  const int k = popcount(s);
  if (a < 0 || b < 0 || a > k || b > n - k)
    throw DomainError("pattern sizes (" + std::to_string(a) + "," + std::to_string(b) + ") do not fit " + subset_string(s));
  if (a + b < 2 || a + b > n - 2) throw DomainError("pattern sizes give no boundary divisor");
}

}  // namespace detail

/// Sum of delta_{A u B} over A in S, |A| = a and B in S^c, |B| = b, one term per (A, B).
inline DivisorClass pattern_sum(int n, Mask s, int a, int b) {
  detail::check_pattern(n, s, a, b);
  DivisorClass d(n);
  const Mask sc = full_mask(n) & ~s;
  for (Mask x : k_subsets(s, a))
    for (Mask y : k_subsets(sc, b)) d.add_delta(x | y, 1);
  return d;
}

/// Same support as pattern_sum, but every distinct class counted once.
inline DivisorClass class_sum(int n, Mask s, int a, int b) {
  detail::check_pattern(n, s, a, b);
  std::set<BoundaryClass> seen;
  const Mask sc = full_mask(n) & ~s;
  for (Mask x : k_subsets(s, a))
    for (Mask y : k_subsets(sc, b)) seen.insert(BoundaryClass(n, x | y));
  DivisorClass d(n);
  for (const auto& c : seen) d.add_delta(c, 1);
  return d;
}

inline Rational psi_average_weight(int n, int j) {
  return rat(static_cast<long>(n - 1 - j) * (n - 2 - j), static_cast<long>(n - 1) * (n - 2));
}

/// psi_i as an average of the boundary classes through i.
inline DivisorClass psi_average(int n, int i) {
  check_n(n);
  if (i < 1 || i > n) throw DomainError("psi index out of range");
  DivisorClass d(n);
  for (int j = 1; j <= n - 3; ++j) d += psi_average_weight(n, j) * pattern_sum(n, label_bit(i), 1, j);
  return d;
}

inline Rational eta(int n, int s, int a, int b) {
  const long num = static_cast<long>(a) * (b + s - n) * (1 + b + a * (n - 1) - n + s - s * (a + b));
  const long den = static_cast<long>(s) * (s - 1) * (n - s) * (n - s - 1);
  return rat(num, den);
}

/// delta_S as an average of the classes invariant under the stabilizer of S.
inline DivisorClass delta_average(int n, Mask s) {
  check_n(n);
  const int k = popcount(s);
  if (k < 2 || n - k < 2 || (s & ~full_mask(n)) != 0)
    throw DomainError("delta average needs |S|, |S^c| >= 2, got " + subset_string(s));
  DivisorClass d(n);
  for (int a = 1; a <= k; ++a)
    for (int b = 0; b <= n - k - 1; ++b) {
      if (a == k && b == 0) continue;
      Rational e = eta(n, k, a, b);
      if (a + b < 2 || a + b > n - 2) {
        if (sgn(e) != 0) throw InternalError("nonzero weight on a non-boundary pattern");
        continue;
      }
      if (sgn(e) != 0) d += e * pattern_sum(n, s, a, b);
    }
  return d;
}

enum class NamedKind { psi, delta, kappa1, canonical, b, total_boundary, pattern_sum, class_sum };

struct NamedParams {
  int index = 0;  // psi label or B index
  Mask set = 0;   // delta set or pattern set
  int a = 0, b = 0;
};

inline DivisorClass named_class(const PicContext& ctx, NamedKind kind, const NamedParams& p = {}) {
  const int n = ctx.n();
  switch (kind) {
    case NamedKind::psi: return psi_class(n, p.index);
    case NamedKind::delta: return delta_class(n, p.set);
    case NamedKind::kappa1: return kappa1(n);
    case NamedKind::canonical: return canonical_class(n);
    case NamedKind::b: return b_class(n, p.index);
    case NamedKind::total_boundary: return total_boundary(n);
    case NamedKind::pattern_sum: return pattern_sum(n, p.set, p.a, p.b);
    case NamedKind::class_sum: return class_sum(n, p.set, p.a, p.b);
  }
  throw DomainError("unknown named class");
}

/// Relabels every symbol by the transposition (a b).
inline DivisorClass transpose_labels(const DivisorClass& d, int a, int b) {
  DivisorClass out(d.n());
  for (const auto& [s, c] : d.terms()) {
    if (s.is_psi)
      out.add_psi(s.label == a ? b : s.label == b ? a : s.label, c);
    else {
      Mask m = s.rep;
      if (has_label(m, a) != has_label(m, b)) m ^= label_bit(a) | label_bit(b);
      out.add_delta(m, c);
    }
  }
  return out;
}

}  // namespace m0n
