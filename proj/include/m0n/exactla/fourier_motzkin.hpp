#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "m0n/exactla/lp.hpp"

namespace m0n {

struct ProjectionBounds {
  bool feasible = false;
  std::optional<Rational> lower;  // of the objective, when bounded below
  std::optional<Rational> upper;
};

namespace detail {

// row . x >= rhs, stored as coefficients followed by rhs.
using FmRow = RatVector;

inline FmRow fm_normalized(FmRow r) {
  const std::size_t k = r.size() - 1;
  for (std::size_t j = 0; j < k; ++j)
    if (sgn(r[j]) != 0) {
      Rational s = abs(r[j]);
      for (auto& x : r) x /= s;
      return r;
    }
  return r;
}

}  // namespace detail

/// Range of the objective over the feasible set, by eliminating every
/// variable. Exponential; meant as an independent check on small systems.
inline ProjectionBounds fourier_motzkin_bounds(const LPProblem& p) {
  detail::check_shape(p);
  const std::size_t nv = p.variables;
  const std::size_t k = nv + 1;  // last variable is t = objective . x
  using detail::FmRow;
  std::vector<FmRow> eqs, ineqs;
  auto widen = [&](const LinearRow& r) {
    FmRow row(k + 1, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) row[j] = r.coeffs[j];
    row[k] = r.rhs;
    return row;
  };
  for (const auto& r : p.equalities) eqs.push_back(widen(r));
  for (const auto& r : p.inequalities) ineqs.push_back(widen(r));
  {
    FmRow t(k + 1, Rational(0));
    if (p.sense != Sense::feasibility)
      for (std::size_t j = 0; j < nv; ++j) t[j] = p.objective[j];
    t[nv] = -1;
    eqs.push_back(std::move(t));
  }

  // Substitute equalities away, never solving for t while an x remains.
  std::vector<bool> eliminated(k, false);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    FmRow& row = eqs[e];
    std::size_t piv = k;
    for (std::size_t j = 0; j < nv && piv == k; ++j)
      if (sgn(row[j]) != 0) piv = j;
    if (piv == k && sgn(row[nv]) != 0) piv = nv;
    if (piv == k) {
      if (sgn(row[k]) != 0) return {};
      continue;
    }
    auto substitute = [&](FmRow& other) {
      if (sgn(other[piv]) == 0) return;
      Rational f = other[piv] / row[piv];
      for (std::size_t j = 0; j <= k; ++j) other[j] -= f * row[j];
    };
    for (std::size_t o = e + 1; o < eqs.size(); ++o) substitute(eqs[o]);
    for (auto& r : ineqs) substitute(r);
    eliminated[piv] = true;
  }

  auto dedupe = [](std::vector<FmRow>& rows) -> bool {
    std::set<std::vector<std::string>> seen;
    std::vector<FmRow> out;
    for (auto& r : rows) {
      r = detail::fm_normalized(std::move(r));
      bool constant = std::all_of(r.begin(), r.end() - 1, [](const Rational& x) { return sgn(x) == 0; });
      if (constant) {
        if (sgn(r.back()) > 0) return false;
        continue;
      }
      std::vector<std::string> key;
      for (const auto& x : r) key.push_back(x.get_str());
      if (seen.insert(key).second) out.push_back(std::move(r));
    }
    rows = std::move(out);
    return true;
  };
  if (!dedupe(ineqs)) return {};
  for (std::size_t v = 0; v < nv; ++v) {
    if (eliminated[v]) continue;
    std::vector<FmRow> pos, neg, next;
    for (auto& r : ineqs) {
      int s = sgn(r[v]);
      (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
    }
    for (const auto& a : pos)
      for (const auto& b : neg) {
        FmRow c(k + 1);
        Rational fa = -b[v], fb = a[v];
        for (std::size_t j = 0; j <= k; ++j) c[j] = fa * a[j] + fb * b[j];
        next.push_back(std::move(c));
      }
    ineqs = std::move(next);
    if (!dedupe(ineqs)) return {};
  }

  ProjectionBounds out;
  out.feasible = true;
  if (eliminated[nv]) {
    // t was fixed by an equality that mentioned no free x: the objective is constant.
    for (const auto& row : eqs) {
      bool only_t = sgn(row[nv]) != 0;
      for (std::size_t j = 0; j < nv && only_t; ++j)
        if (sgn(row[j]) != 0) only_t = false;
      if (only_t) {
        out.lower = out.upper = row[k] / row[nv];
        return out;
      }
    }
  }
  for (const auto& r : ineqs) {
    Rational bound = r[k] / r[nv];
    if (sgn(r[nv]) > 0) {
      if (!out.lower || bound > *out.lower) out.lower = bound;
    } else if (!out.upper || bound < *out.upper) {
      out.upper = bound;
    }
  }
  if (out.lower && out.upper && *out.lower > *out.upper) return {};
  return out;
}

}  // namespace m0n
