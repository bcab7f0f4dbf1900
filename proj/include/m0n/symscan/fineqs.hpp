#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "m0n/intersect/pairing.hpp"
#include "m0n/picard/named.hpp"

namespace m0n {

/// Parts of a partition of n into four positive integers, largest first.
using Shape = std::array<int, 4>;

/// K + sum r_i B_i (with_K) or sum r_i B_i; r[k] is the coefficient of B_{k+2}.
struct SymClass {
  int n = 0;
  RatVector r;
  bool with_K = false;

  static std::size_t size_for(int n) { return n >= 4 ? static_cast<std::size_t>(n / 2 - 1) : 0; }

  SymClass() = default;
  SymClass(int n_, RatVector r_, bool with_k) : n(n_), r(std::move(r_)), with_K(with_k) {
    if (n < 4 || n > kMaxPoints) throw DomainError("symmetric classes need 4 <= n <= " + std::to_string(kMaxPoints));
    if (r.size() != size_for(n))
      throw ShapeError("r has " + std::to_string(r.size()) + " entries, n = " + std::to_string(n) + " needs " +
                       std::to_string(size_for(n)));
  }
  static SymClass zero(int n, bool with_k) { return SymClass(n, RatVector(size_for(n), Rational(0)), with_k); }

  /// r_k with r_k = r_{n-k} and r_0 = r_1 = 0.
  Rational at(int k) const {
    k = std::min(k, n - k);
    if (k < 2) return 0;
    return r[static_cast<std::size_t>(k - 2)];
  }
  Rational& operator[](int i) {
    if (i < 2 || 2 * i > n) throw DomainError("B index " + std::to_string(i) + " out of range");
    return r[static_cast<std::size_t>(i - 2)];
  }
  bool operator==(const SymClass& o) const { return n == o.n && r == o.r && with_K == o.with_K; }

  std::string str() const {
    std::string s = with_K ? "K" : "";
    for (std::size_t k = 0; k < r.size(); ++k)
      if (sgn(r[k]) != 0) s += (s.empty() ? "" : " + ") + to_string(r[k]) + "*B" + std::to_string(k + 2);
    return s.empty() ? "0" : s;
  }
};

inline void check_shape(int n, const Shape& s) {
  int total = 0;
  for (int p : s) {
    if (p < 1) throw DomainError("shape parts must be positive");
    total += p;
  }
  if (total != n) throw DomainError("shape parts sum to " + std::to_string(total) + ", not " + std::to_string(n));
}

inline Shape normalize_shape(Shape s) {
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

inline std::string shape_string(const Shape& s) {
  return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
         std::to_string(s[3]) + ")";
}

/// 2 minus the number of parts equal to 1.
inline int f_value(const Shape& s) {
  for (int p : s)
    if (p < 1) throw DomainError("shape parts must be positive");
  return 2 - static_cast<int>(std::count(s.begin(), s.end(), 1));
}

/// All partitions of n into four parts.
inline std::vector<Shape> shapes(int n) {
  std::vector<Shape> out;
  for (int a = n - 3; a >= 1; --a)
    for (int b = std::min(a, n - a - 2); b >= 1; --b)
      for (int c = std::min(b, n - a - b - 1); c >= 1; --c) {
        const int d = n - a - b - c;
        if (d >= 1 && d <= c) out.push_back({a, b, c, d});
      }
  return out;
}

/// constant + coeffs . r >= 0, coeffs indexed like SymClass::r.
struct FIneq {
  Shape shape{};
  int constant = 0;
  std::vector<long> coeffs;

  Rational evaluate(const RatVector& r) const {
    if (r.size() != coeffs.size()) throw ShapeError("r has the wrong length for this inequality");
    Rational v = constant;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (coeffs[k]) v += coeffs[k] * r[k];
    return v;
  }

  /// "lhs >= rhs" with positive coefficients on both sides, r-terms by index.
  std::string str() const {
    auto side = [&](int sign) {
      std::string s;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const long c = coeffs[k] * sign;
        if (c <= 0) continue;
        s += (s.empty() ? "" : " + ") + (c == 1 ? std::string() : std::to_string(c)) + "r_" + std::to_string(k + 2);
      }
      const int c0 = constant * sign;
      if (c0 > 0) s = s.empty() ? std::to_string(c0) : std::to_string(c0) + " + " + s;
      return s.empty() ? std::string("0") : s;
    };
    return side(1) + " >= " + side(-1);
  }
};

inline FIneq fineq(int n, const Shape& shape) {
  check_shape(n, shape);
  FIneq q{normalize_shape(shape), f_value(shape), std::vector<long>(SymClass::size_for(n), 0)};
  auto add = [&](int k, long c) {
    k = std::min(k, n - k);
    if (k >= 2) q.coeffs[static_cast<std::size_t>(k - 2)] += c;
  };
  const Shape& s = q.shape;
  for (int j = 1; j < 4; ++j) add(s[0] + s[j], 1);
  for (int p : s) add(p, -1);
  return q;
}

/// One inequality per shape, in the order of shapes(n).
inline std::vector<FIneq> sym_fineqs(int n) {
  if (n < 4 || n > kMaxPoints) throw DomainError("sym_fineqs needs 4 <= n <= " + std::to_string(kMaxPoints));
  std::vector<FIneq> out;
  for (const auto& s : shapes(n)) out.push_back(fineq(n, s));
  return out;
}

/// Degree of the class on any F-curve with block sizes `shape`.
inline Rational sym_dot(const SymClass& c, const Shape& shape) {
  check_shape(c.n, shape);
  Rational v = c.with_K ? Rational(f_value(shape)) : Rational(0);
  for (int j = 1; j < 4; ++j) v += c.at(shape[0] + shape[j]);
  for (int p : shape) v -= c.at(p);
  return v;
}

/// F-curve with consecutive label blocks of the given sizes.
inline FCurve fcurve_of_shape(int n, const Shape& shape) {
  check_shape(n, shape);
  std::array<Mask, 4> blocks{};
  int next = 1;
  for (int b = 0; b < 4; ++b)
    for (int k = 0; k < shape[b]; ++k) blocks[b] |= label_bit(next++);
  return FCurve(n, blocks);
}

inline DivisorClass expand(const SymClass& c) {
  DivisorClass d = c.with_K ? canonical_class(c.n) : DivisorClass(c.n);
  for (int i = 2; 2 * i <= c.n; ++i)
    if (sgn(c.at(i)) != 0) d += c.at(i) * b_class(c.n, i);
  return d;
}

/// B-coordinates of a class whose coefficients are S_n-symmetric.
/// sum psi_i = sum_j j(n-j)/(n-1) B_j; with_k subtracts the canonical class.
inline SymClass sym_coords(const DivisorClass& d, bool with_k = false) {
  const int n = d.n();
  SymClass out = SymClass::zero(n, with_k);
  const Rational psi = d.psi(1);
  for (int i = 2; i <= n; ++i)
    if (d.psi(i) != psi) throw InvarianceError("psi coefficients differ between labels 1 and " + std::to_string(i), "");
  std::vector<bool> seen(out.r.size(), false);
  for (const auto& b : boundary_classes(n)) {
    const auto k = static_cast<std::size_t>(b.size() - 2);
    const Rational c = d.delta(b.rep);
    if (!seen[k]) {
      out.r[k] = c;
      seen[k] = true;
    } else if (out.r[k] != c) {
      throw InvarianceError("boundary coefficients differ on classes of size " + std::to_string(b.size()), "");
    }
  }
  for (int j = 2; 2 * j <= n; ++j) {
    out[j] += psi * rat(static_cast<long>(j) * (n - j), n - 1);
    if (with_k) out[j] -= canonical_b_coefficient(n, j);
  }
  return out;
}

}  // namespace m0n
