#pragma once

#include <set>
#include <tuple>
#include <vector>

#include "m0n/combinat/restriction.hpp"
#include "m0n/symscan/fineqs.hpp"

namespace m0n {

/// Coefficient of B_i^S: the sum of delta_T over T with |T| = i and T meeting the
/// attached-tail positions X exactly in S. (i, S) and (m - i, X \ S) name the
/// same classes; only the smaller of the two tuples (|S|, i, S) appears.
struct SymPullbackEntry {
  int i = 0;
  Mask s = 0;  // positions on M_{0,m}
  Rational c;
};

struct SymPullbackTable {
  int m = 0;
  Mask big = 0;  // positions x with n_x >= 2
  std::vector<SymPullbackEntry> entries;

  Rational at(int i, Mask s) const {
    for (const auto& e : entries)
      if (e.i == i && e.s == s) return e.c;
    throw DomainError("no B_i^S entry for i = " + std::to_string(i) + ", S = " + subset_string(s));
  }
};

namespace detail {

inline std::tuple<int, int, Mask> bis_key(int i, Mask s) { return {popcount(s), i, s}; }

/// Canonical (i, S) for a set T of positions.
inline std::pair<int, Mask> bis_label(int m, Mask big, Mask t) {
  const int i = popcount(t);
  const Mask s = t & big, sc = big & ~s;
  return bis_key(i, s) <= bis_key(m - i, sc) ? std::pair{i, s} : std::pair{m - i, sc};
}

}  // namespace detail

/// B_i^S as a class on M_{0,m}, each boundary class once.
inline DivisorClass bis_class(int m, Mask big, int i, Mask s) {
  std::set<BoundaryClass> seen;
  for (Mask t : k_subsets(full_mask(m), i))
    if ((t & big) == s) seen.insert(BoundaryClass(m, t));
  DivisorClass d(m);
  for (const auto& b : seen) d.add_delta(b, 1);
  return d;
}

/// nu^*(sum r_i B_i) in the B_i^S classes, with every psi_x replaced by its average.
inline SymPullbackTable sym_pullback(const SymClass& r, const BoundaryRestriction& nu) {
  if (r.with_K) throw DomainError("sym_pullback takes a pure boundary class (no K term)");
  if (r.n != nu.n) throw DomainError("restriction and class disagree on n");
  const int m = nu.m();
  if (m < 4) throw DomainError("sym_pullback needs m >= 4");
  SymPullbackTable out;
  out.m = m;
  for (int x = 1; x <= m; ++x)
    if (nu.block_size(x) >= 2) out.big |= label_bit(x);
  std::set<std::pair<int, Mask>> labels;
  for (int i = 2; i <= m - 2; ++i)
    for (Mask t : k_subsets(full_mask(m), i)) labels.insert(detail::bis_label(m, out.big, t));
  const Rational den = static_cast<long>(m - 1) * (m - 2);
  for (const auto& [i, s] : labels) {
    int size = i;
    Rational in_s = 0, out_s = 0;
    for (int x : labels_of(out.big)) {
      const int nx = nu.block_size(x);
      if (has_label(s, x)) {
        size += nx - 1;
        in_s += r.at(nx);
      } else {
        out_s += r.at(nx);
      }
    }
    const Rational c =
        r.at(size) - (static_cast<long>(m - i) * (m - 1 - i) * in_s + static_cast<long>(i) * (i - 1) * out_s) / den;
    out.entries.push_back({i, s, c});
  }
  return out;
}

inline DivisorClass expand(const SymPullbackTable& t) {
  DivisorClass d(t.m);
  for (const auto& e : t.entries)
    if (sgn(e.c) != 0) d += e.c * bis_class(t.m, t.big, e.i, e.s);
  return d;
}

}  // namespace m0n
