#pragma once

// Brute-force references for small polyhedra. They share nothing with the
// library's elimination code beyond the rational type.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "m0n/exactla/rational.hpp"

namespace oracle {

using m0n::Rational;
using m0n::RatVector;

/// Unique solution of the square system A x = b, if A is invertible.
inline std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline std::size_t rank_of(std::vector<RatVector> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

/// Vertices of {x : rows . x >= rhs} in R^d by trying every d-subset as active set.
inline std::vector<RatVector> vertices(const std::vector<RatVector>& rows, const RatVector& rhs, std::size_t d) {
  std::set<RatVector> out;
  std::vector<std::size_t> pick(d);
  const std::size_t m = rows.size();
  if (m < d) return {};
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    std::vector<RatVector> a;
    RatVector b;
    for (auto i : pick) {
      a.push_back(rows[i]);
      b.push_back(rhs[i]);
    }
    if (auto x = solve_square(a, b)) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) ok = m0n::dot(rows[i], *x) >= rhs[i];
      if (ok) out.insert(*x);
    }
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == m - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {out.begin(), out.end()};
}

/// Extreme rays of a pointed cone {x in R^3 : rows . x >= 0}: cross products of constraint pairs.
inline std::set<RatVector> rays3(const std::vector<RatVector>& rows) {
  std::set<RatVector> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& a = rows[i];
      const auto& b = rows[j];
      RatVector c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      if (m0n::is_zero(c)) continue;
      for (int sign : {1, -1}) {
        RatVector v = c;
        for (auto& x : v) x *= sign;
        bool ok = true;
        std::vector<RatVector> tight;
        for (const auto& r : rows) {
          Rational t = m0n::dot(r, v);
          if (t < 0) ok = false;
          if (t == 0) tight.push_back(r);
        }
        if (ok && rank_of(tight) == 2) {
          auto p = m0n::primitive_integer(v);
          out.insert(RatVector(p.begin(), p.end()));
        }
      }
    }
  return out;
}

}  // namespace oracle
