#pragma once

#include <string>
#include <vector>

#include "m0n/intersect/pairing.hpp"

namespace m0n {

enum class Family { c_ab, c_ab_1, c_ab_2, c_ab_3, c_ab_4, c_1ab_1, c_1ab_2, c_1ab_3, c_small_ab };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::c_ab: return "C_ab";
    case Family::c_ab_1: return "C_ab_1";
    case Family::c_ab_2: return "C_ab_2";
    case Family::c_ab_3: return "C_ab_3";
    case Family::c_ab_4: return "C_ab_4";
    case Family::c_1ab_1: return "C_1ab_1";
    case Family::c_1ab_2: return "C_1ab_2";
    case Family::c_1ab_3: return "C_1ab_3";
    case Family::c_small_ab: return "C_small_ab";
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  for (Family f : {Family::c_ab, Family::c_ab_1, Family::c_ab_2, Family::c_ab_3, Family::c_ab_4, Family::c_1ab_1,
                   Family::c_1ab_2, Family::c_1ab_3, Family::c_small_ab})
    if (to_string(f) == name) return f;
  throw DomainError("unknown curve family '" + name + "'");
}

namespace detail {

inline FCurve fc(int n, Mask a, Mask b, Mask c, Mask d) { return FCurve(n, {a, b, c, d}); }

inline Mask params_mask(int n, const std::vector<int>& labels, std::size_t count) {
  if (labels.size() != count)
    throw DomainError("family needs " + std::to_string(count) + " labels, got " + std::to_string(labels.size()));
  Mask s = 0;
  for (int l : labels) {
    if (l < 1 || l > n) throw DomainError("family label " + std::to_string(l) + " out of range");
    if (has_label(s, l)) throw DomainError("family labels must be distinct");
    s |= label_bit(l);
  }
  return s;
}

/// Unordered splittings of a 4-set into two pairs.
inline std::vector<std::pair<Mask, Mask>> pair_splits(Mask four) {
  std::vector<std::pair<Mask, Mask>> out;
  const int low = lowest_label(four);
  for (int l : labels_of(four))
    if (l != low) {
      const Mask p = label_bit(low) | label_bit(l);
      out.emplace_back(p, four & ~p);
    }
  return out;
}

/// Weight-1/k cycle on six points for a pair (a, b).
inline WeightedCycle pair_family(Family f, int a, int b) {
  const int n = 6;
  const Mask ma = label_bit(a), mb = label_bit(b);
  const Mask rest = full_mask(n) & ~(ma | mb);
  std::vector<FCurve> comps;
  switch (f) {
    case Family::c_ab_1:
      for (int x : labels_of(rest)) comps.push_back(fc(n, ma, mb, label_bit(x), rest & ~label_bit(x)));
      break;
    case Family::c_ab_2:
      for (auto [p, q] : pair_splits(rest)) comps.push_back(fc(n, ma, mb, p, q));
      break;
    case Family::c_ab_3:
      for (int w : labels_of(rest)) {
        const Mask singles = rest & ~label_bit(w);
        const auto xs = labels_of(singles);
        comps.push_back(fc(n, label_bit(xs[0]), label_bit(xs[1]), label_bit(xs[2]), ma | mb | label_bit(w)));
      }
      break;
    case Family::c_ab_4:
      for (Mask p : k_subsets(rest, 2)) {
        const auto xs = labels_of(rest & ~p);
        comps.push_back(fc(n, ma | mb, p, label_bit(xs[0]), label_bit(xs[1])));
      }
      break;
    default: throw DomainError("not a pair family");
  }
  WeightedCycle c{n, {}};
  for (const auto& x : comps) c.add(x, rat(1, static_cast<long>(comps.size())));
  return c;
}

/// Weight-1/9 cycle on six points for a triple T.
inline WeightedCycle triple_family(Family f, Mask t) {
  const int n = 6;
  const Mask out = full_mask(n) & ~t;
  WeightedCycle c{n, {}};
  for (int u : labels_of(t)) {
    const Mask mt = label_bit(u), others = t & ~mt;
    for (int r : labels_of(out)) {
      const Mask mr = label_bit(r), pq = out & ~mr;
      switch (f) {
        case Family::c_1ab_1: c.add(fc(n, mt, mr, others, pq), rat(1, 9)); break;
        case Family::c_1ab_2: {
          // t alone with two outside singletons; r is the outside point joining the others.
          const auto ps = labels_of(pq);
          c.add(fc(n, mt, label_bit(ps[0]), label_bit(ps[1]), others | mr), rat(1, 9));
          break;
        }
        case Family::c_1ab_3: {
          // the two points of T other than u are singletons, u joins two outside points.
          const auto os = labels_of(others);
          c.add(fc(n, label_bit(os[0]), label_bit(os[1]), mr, mt | pq), rat(1, 9));
          break;
        }
        default: throw DomainError("not a triple family");
      }
    }
  }
  return c;
}

}  // namespace detail

/// params: (a, b) for pair families; (a, b, c) for triple families;
/// (i, j, a, b) for C_small_ab, the cycle pairing to (I+O) - b_{1ij} - b_{1ab}.
inline WeightedCycle family(int n, Family f, const std::vector<int>& params) {
  switch (f) {
    case Family::c_ab: {
      if (n != 5) throw DomainError("C_ab lives on n = 5");
      const Mask ab = detail::params_mask(n, params, 2);
      const Mask rest = full_mask(n) & ~ab;
      WeightedCycle c{n, {}};
      for (int i : labels_of(rest))
        c.add(detail::fc(n, label_bit(params[0]), label_bit(params[1]), label_bit(i), rest & ~label_bit(i)), 1);
      return c;
    }
    case Family::c_ab_1:
    case Family::c_ab_2:
    case Family::c_ab_3:
    case Family::c_ab_4:
      if (n != 6) throw DomainError(to_string(f) + " lives on n = 6");
      detail::params_mask(n, params, 2);
      return detail::pair_family(f, params[0], params[1]);
    case Family::c_1ab_1:
    case Family::c_1ab_2:
    case Family::c_1ab_3:
      if (n != 6) throw DomainError(to_string(f) + " lives on n = 6");
      return detail::triple_family(f, detail::params_mask(n, params, 3));
    case Family::c_small_ab: {
      if (n != 6) throw DomainError("C_small_ab lives on n = 6");
      if (params.size() != 4) throw DomainError("C_small_ab needs labels (i, j, a, b)");
      for (int l : params)
        if (l < 2 || l > n) throw DomainError("C_small_ab labels must lie in 2..6");
      if (params[0] == params[1] || params[2] == params[3]) throw DomainError("C_small_ab pairs need distinct labels");
      const Mask all = full_mask(n);
      const Mask t1 = label_bit(1) | label_bit(params[0]) | label_bit(params[1]);
      const Mask t2 = label_bit(1) | label_bit(params[2]) | label_bit(params[3]);
      if (t1 == t2) throw DomainError("C_small_ab needs {i,j} != {a,b}");
      // Sides of the two triple classes meeting in one point p; p plays the role of 1.
      for (Mask x : {t1, all & ~t1})
        for (Mask y : {t2, all & ~t2}) {
          if (popcount(x & y) != 1) continue;
          const Mask mp = x & y;
          const Mask mk = all & ~(x | y);
          WeightedCycle c = detail::pair_family(Family::c_ab_3, lowest_label(mp), lowest_label(mk));
          c += detail::pair_family(Family::c_ab_4, lowest_label(mp), lowest_label(mk)).scaled(rat(1, 2));
          c.add(detail::fc(n, x & ~mp, y & ~mp, mp, mk), 1);
          return c;
        }
      throw InternalError("no sides of the two triple classes meet in one point");
    }
  }
  throw DomainError("unknown curve family");
}

}  // namespace m0n
