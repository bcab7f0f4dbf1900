#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "m0n/exactla/rational.hpp"

namespace m0n {

/// Generators of {x : A x >= 0}: the cone is cone(rays) + span(lineality).
struct ConeGenerators {
  std::vector<RatVector> rays;       // primitive integral, sorted
  std::vector<RatVector> lineality;  // reduced basis, first nonzero coordinate positive
};

namespace detail {

class TightSet {
 public:
  explicit TightSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  TightSet operator&(const TightSet& o) const {
    TightSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool contains(const TightSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

using IntVector = std::vector<Integer>;

inline void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline Integer int_dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

inline RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

struct DdRay {
  IntVector v;
  TightSet tight;
};

}  // namespace detail

/// Double description method. Rows are processed in the given order; adjacency
/// of two rays is decided combinatorially from their common tight constraints.
inline ConeGenerators extreme_rays(const std::vector<RatVector>& inequalities, std::size_t dim) {
  using namespace detail;
  const std::size_t m = inequalities.size();
  std::vector<IntVector> rows;
  rows.reserve(m);
  for (const auto& r : inequalities) {
    if (r.size() != dim) throw ShapeError("inequality row length does not match the dimension");
    rows.push_back(primitive_integer(r));
  }

  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DdRay> rays;

  for (std::size_t c = 0; c < m; ++c) {
    const IntVector& a = rows[c];
    if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return sgn(x) == 0; })) continue;

    std::size_t pick = lineality.size();
    for (std::size_t i = 0; i < lineality.size() && pick == lineality.size(); ++i)
      if (sgn(int_dot(a, lineality[i])) != 0) pick = i;
    if (pick < lineality.size()) {
      IntVector l0 = lineality[pick];
      Integer a0 = int_dot(a, l0);
      if (sgn(a0) < 0) {
        for (auto& x : l0) x = -x;
        a0 = -a0;
      }
      // Project everything else onto a.x = 0 along l0 (scaled by a0 to stay integral).
      auto project = [&](IntVector& v) {
        Integer av = int_dot(a, v);
        if (sgn(av) == 0) return;
        for (std::size_t j = 0; j < dim; ++j) v[j] = a0 * v[j] - av * l0[j];
        make_primitive(v);
      };
      std::vector<IntVector> rest;
      for (std::size_t i = 0; i < lineality.size(); ++i)
        if (i != pick) {
          project(lineality[i]);
          rest.push_back(std::move(lineality[i]));
        }
      lineality = std::move(rest);
      for (auto& r : rays) {
        project(r.v);
        r.tight.set(c);
      }
      DdRay fresh{l0, TightSet(m)};
      for (std::size_t p = 0; p < c; ++p) fresh.tight.set(p);
      make_primitive(fresh.v);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = int_dot(a, rays[i].v);
      int s = sgn(val[i]);
      if (s > 0) pos.push_back(i);
      if (s < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (sgn(val[i]) == 0) rays[i].tight.set(c);
      continue;
    }
    const std::size_t needed = dim - lineality.size() >= 2 ? dim - lineality.size() - 2 : 0;
    std::vector<DdRay> next;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        TightSet z = rays[p].tight & rays[q].tight;
        if (z.count() < needed) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && rays[r].tight.contains(z)) adjacent = false;
        if (!adjacent) continue;
        IntVector v(dim);
        Integer fp = -val[q], fq = val[p];
        for (std::size_t j = 0; j < dim; ++j) v[j] = fp * rays[p].v[j] + fq * rays[q].v[j];
        make_primitive(v);
        z.set(c);
        next.push_back({std::move(v), std::move(z)});
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      int s = sgn(val[i]);
      if (s < 0) continue;
      if (s == 0) rays[i].tight.set(c);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(to_rational(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  if (!lineality.empty()) {
    // Reduced echelon basis, scaled to primitive integers with a positive leading entry.
    std::vector<RatVector> basis;
    for (auto& l : lineality) basis.push_back(to_rational(l));
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < basis.size(); ++col) {
      std::size_t r = row;
      while (r < basis.size() && sgn(basis[r][col]) == 0) ++r;
      if (r == basis.size()) continue;
      std::swap(basis[r], basis[row]);
      Rational inv = 1 / basis[row][col];
      for (auto& x : basis[row]) x *= inv;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (i != row && sgn(basis[i][col]) != 0) axpy(basis[i], Rational(-basis[i][col]), basis[row]);
      ++row;
    }
    for (auto& b : basis) out.lineality.push_back(to_rational(primitive_integer(b)));
  }
  return out;
}

}  // namespace m0n
