#pragma once

#include <string>
#include <vector>

#include "m0n/combinat/subsets.hpp"

namespace m0n {

inline void check_n(int n) {
  if (n < 4) throw DomainError("need n >= 4, got " + std::to_string(n));
  if (n > kMaxPoints) throw DomainError("n = " + std::to_string(n) + " exceeds the supported label range");
}

/// The representative of {S, S^c}: the smaller side, or on a tie the side containing label 1.
inline Mask canonical_side(int n, Mask s) {
  const Mask all = full_mask(n);
  if ((s & ~all) != 0) throw DomainError("subset " + subset_string(s) + " has labels beyond n");
  const int k = popcount(s);
  if (k < 2 || n - k < 2)
    throw DomainError("subset " + subset_string(s) + " does not define a boundary divisor for n = " + std::to_string(n));
  const Mask c = all & ~s;
  if (k < n - k) return s;
  if (k > n - k) return c;
  return has_label(s, 1) ? s : c;
}

/// An unordered split {S, S^c} of {1..n}, |S|, |S^c| >= 2.
struct BoundaryClass {
  int n = 0;
  Mask rep = 0;

  BoundaryClass() = default;
  BoundaryClass(int n_, Mask s) : n(n_), rep(canonical_side(n_, s)) {}

  Mask complement() const { return full_mask(n) & ~rep; }
  int size() const { return popcount(rep); }
  bool operator==(const BoundaryClass& o) const { return n == o.n && rep == o.rep; }
  bool operator<(const BoundaryClass& o) const {
    if (n != o.n) return n < o.n;
    return subset_less(rep, o.rep);
  }
  std::string str() const { return subset_string(rep); }
};

/// Every boundary class of M_{0,n}, canonical and sorted; 2^{n-1} - n - 1 of them.
inline std::vector<BoundaryClass> boundary_classes(int n) {
  check_n(n);
  std::vector<BoundaryClass> out;
  const Mask all = full_mask(n);
  for (int k = 2; 2 * k <= n; ++k)
    for (Mask s : k_subsets(all, k))
      if (2 * k < n || has_label(s, 1)) out.emplace_back(n, s);
  return out;
}

}  // namespace m0n
