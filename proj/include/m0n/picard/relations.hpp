#pragma once

#include <vector>

#include "m0n/picard/divisor.hpp"

namespace m0n {

/// Sum of delta_T over classes having a side that contains `in` and misses `out`.
inline DivisorClass separating_sum(int n, Mask in, Mask out) {
  DivisorClass d(n);
  for (const auto& b : boundary_classes(n)) {
    const Mask sides[2] = {b.rep, b.complement()};
    for (Mask t : sides)
      if ((t & in) == in && (t & out) == 0) {
        d.add_delta(b, 1);
        break;
      }
  }
  return d;
}

/// For every 4-subset {p,q,r,s}: (pq|rs) - (pr|qs) and (pq|rs) - (ps|qr).
inline std::vector<DivisorClass> keel_relations(int n) {
  check_n(n);
  std::vector<DivisorClass> out;
  for (Mask four : k_subsets(full_mask(n), 4)) {
    auto l = labels_of(four);
    auto split = [&](int a, int b, int c, int d) {
      return separating_sum(n, label_bit(a) | label_bit(b), label_bit(c) | label_bit(d));
    };
    DivisorClass pq = split(l[0], l[1], l[2], l[3]);
    out.push_back(pq - split(l[0], l[2], l[1], l[3]));
    out.push_back(pq - split(l[0], l[3], l[1], l[2]));
  }
  return out;
}

/// psi_i minus the classes separating i from a pair {q, r}, for all i and pairs.
inline std::vector<DivisorClass> psi_relations(int n) {
  check_n(n);
  std::vector<DivisorClass> out;
  for (int i = 1; i <= n; ++i)
    for (Mask qr : k_subsets(full_mask(n) & ~label_bit(i), 2)) {
      DivisorClass d(n);
      d.add_psi(i, 1);
      d -= separating_sum(n, label_bit(i), qr);
      out.push_back(std::move(d));
    }
  return out;
}

}  // namespace m0n
