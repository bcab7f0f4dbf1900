#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "m0n/exactla/lp.hpp"
#include "m0n/picard/effective.hpp"
#include "m0n/picard/named.hpp"

namespace m0n {

enum class BigKind { ample_plus_effective, pattern1, pattern2 };

inline const char* to_string(BigKind k) {
  switch (k) {
    case BigKind::ample_plus_effective: return "ample_plus_effective";
    case BigKind::pattern1: return "pattern1";
    case BigKind::pattern2: return "pattern2";
  }
  return "?";
}

/// Certificate that a boundary combination is big.
struct BigWitness {
  BigKind kind = BigKind::ample_plus_effective;
  std::array<int, 6> labeling{};  // (i, j, k, l, m, n) for the patterns
  Rational t;                      // D = t kappa_1 + remainder
  BoundaryCombination remainder;

  std::string str() const {
    if (kind == BigKind::ample_plus_effective) return std::string(to_string(kind)) + " t=" + to_string(t);
    std::string s = std::string(to_string(kind)) + " (i,j,k,l,m,n)=(";
    for (int k = 0; k < 6; ++k) s += (k ? "," : "") + std::to_string(labeling[k]);
    return s + ")";
  }
};

namespace detail {

inline std::vector<Mask> big_pattern(BigKind kind, const std::array<int, 6>& p) {
  auto b = [&](std::initializer_list<int> idx) {
    Mask s = 0;
    for (int k : idx) s |= label_bit(p[k]);
    return s;
  };
  enum { i, j, k, l, m, n };
  if (kind == BigKind::pattern1) return {b({m, n}), b({i, l}), b({j, l}), b({k, l}), b({m, n, i}), b({m, n, j}), b({m, n, k})};
  std::vector<Mask> out{b({i, l}), b({j, m}), b({k, n})};
  const BoundaryClass skip(6, b({i, j, k}));
  for (const auto& c : boundary_classes(6))
    if (c.size() == 3 && !(c == skip)) out.push_back(c.rep);
  return out;
}

/// Largest t with D - t kappa_1 a nonnegative boundary combination (n <= 10).
inline std::optional<std::pair<Rational, BoundaryCombination>> max_ample_part(const DivisorClass& d) {
  const int n = d.n();
  const auto& ctx = pic_context(n);
  const auto& classes = ctx.classes();
  const std::size_t nv = classes.size() + 1;  // y_S, then t
  LPProblem p;
  p.variables = nv;
  const RatVector target = ctx.normal_form(d), kap = ctx.normal_form(kappa1(n));
  std::vector<RatVector> cols;
  for (const auto& c : classes) cols.push_back(ctx.form(Symbol::delta(c)));
  for (std::size_t r = 0; r < ctx.dim(); ++r) {
    RatVector row(nv, Rational(0));
    for (std::size_t k = 0; k < classes.size(); ++k) row[k] = cols[k][r];
    row[classes.size()] = kap[r];
    p.add_equality(std::move(row), target[r]);
  }
  p.add_nonnegativity();
  p.objective.assign(nv, Rational(0));
  p.objective[classes.size()] = 1;
  p.sense = Sense::maximize;
  const auto out = solve_lp(p);
  if (out.status != LPStatus::optimal || sgn(out.value) <= 0) return std::nullopt;
  BoundaryCombination rem{n, {}};
  for (std::size_t k = 0; k < classes.size(); ++k) rem.add(classes[k], out.witness[k]);
  return std::make_pair(out.value, rem);
}

}  // namespace detail

/// Bigness certificate for a nonnegative boundary combination on five or six
/// points. Tries, in order: full support (kappa_1 inside), the two six-point
/// support patterns over all labelings, and an exact LP for kappa_1 plus effective.
inline std::optional<BigWitness> big_witness(const BoundaryCombination& e) {
  if (!e.nonnegative()) throw PreconditionError("big_witness needs a nonnegative boundary combination");
  const int n = e.n;
  if (n != 5 && n != 6) throw DomainError("big_witness works on five or six points");
  const DivisorClass k = kappa1(n);
  {
    bool full = true;
    Rational t;
    for (const auto& c : boundary_classes(n)) {
      const Rational q = e.coefficient(c) / k.coefficient(Symbol::delta(c));
      if (sgn(q) <= 0) {
        full = false;
        break;
      }
      if (sgn(t) == 0 || q < t) t = q;
    }
    if (full) {
      BoundaryCombination rem = e;
      for (const auto& c : boundary_classes(n)) rem.add(c, -t * k.coefficient(Symbol::delta(c)));
      return BigWitness{BigKind::ample_plus_effective, {}, t, rem};
    }
  }
  if (n == 6) {
    std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
    for (BigKind kind : {BigKind::pattern1, BigKind::pattern2}) {
      perm = {1, 2, 3, 4, 5, 6};
      do {
        const auto need = detail::big_pattern(kind, perm);
        if (std::all_of(need.begin(), need.end(), [&](Mask s) { return sgn(e.coefficient(BoundaryClass(6, s))) > 0; }))
          return BigWitness{kind, perm, 0, {}};
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  if (auto a = detail::max_ample_part(e.divisor())) return BigWitness{BigKind::ample_plus_effective, {}, a->first, a->second};
  return std::nullopt;
}

}  // namespace m0n
