#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "m0n/exactla/lp.hpp"
#include "m0n/exactla/rays.hpp"
#include "m0n/symscan/fineqs.hpp"

namespace m0n {

struct ScanEntry {
  int slice = 0;   // r_slice = 0
  int target = 0;  // maximized r_target
  LPStatus status = LPStatus::optimal;
  Rational max;
  RatVector vertex;  // LP optimum, indexed like SymClass::r
};

struct ScanViolation {
  int slice = 0, target = 0;
  Rational max;
  RatVector vertex;
  Rational low, high;  // feasible range of r_target with the other coordinates fixed at vertex
};

struct ScanReport {
  int n = 0;
  std::vector<FIneq> inequalities;
  std::vector<ScanEntry> entries;
  std::vector<RatVector> exceptional;  // every vertex attaining a maximum of exactly 1
  std::vector<ScanViolation> violations;

  bool bounded() const {
    for (const auto& e : entries)
      if (e.status == LPStatus::unbounded) return false;
    return true;
  }
  /// Slices r_i = 0 with no F-nef point (e.g. r_2 = 0, ruled out by 3r_2 >= r_3 + 1).
  std::vector<int> empty_slices() const {
    std::set<int> s;
    for (const auto& e : entries)
      if (e.status == LPStatus::infeasible) s.insert(e.slice);
    return {s.begin(), s.end()};
  }
  Rational overall_max() const {
    Rational m = 0;
    for (const auto& e : entries)
      if (e.status == LPStatus::optimal && e.max > m) m = e.max;
    return m;
  }
};

namespace detail {

inline LPProblem scan_problem(int n, const std::vector<FIneq>& rows, int slice) {
  const std::size_t h = SymClass::size_for(n);
  LPProblem p;
  p.variables = h;
  for (const auto& q : rows) {
    RatVector c(h);
    for (std::size_t k = 0; k < h; ++k) c[k] = q.coeffs[k];
    p.add_inequality(std::move(c), -q.constant);
  }
  p.add_nonnegativity();
  RatVector e(h, Rational(0));
  e[static_cast<std::size_t>(slice - 2)] = 1;
  p.add_equality(std::move(e), 0);
  return p;
}

/// Vertices of {rows, r >= 0, r_slice = 0, r_target = value}, by homogenizing.
inline std::vector<RatVector> face_vertices(int n, const std::vector<FIneq>& rows, int slice, int target,
                                            const Rational& value) {
  const std::size_t h = SymClass::size_for(n), dim = h + 1;  // (t, r)
  std::vector<RatVector> cone;
  for (const auto& q : rows) {
    RatVector c(dim);
    c[0] = q.constant;
    for (std::size_t k = 0; k < h; ++k) c[k + 1] = q.coeffs[k];
    cone.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < dim; ++k) {
    RatVector e(dim, Rational(0));
    e[k] = 1;
    cone.push_back(std::move(e));
  }
  for (int sign : {1, -1}) {
    RatVector s(dim, Rational(0));
    s[static_cast<std::size_t>(slice - 1)] = sign;
    cone.push_back(std::move(s));
    RatVector t(dim, Rational(0));
    t[static_cast<std::size_t>(target - 1)] = sign;
    t[0] = -sign * value;
    cone.push_back(std::move(t));
  }
  std::vector<RatVector> out;
  const auto gens = extreme_rays(cone, dim);
  if (!gens.lineality.empty()) throw InternalError("scan face has a lineality space");
  for (const auto& ray : gens.rays) {
    if (sgn(ray[0]) == 0) throw InternalError("scan face is unbounded although its LP was bounded");
    RatVector v(h);
    for (std::size_t k = 0; k < h; ++k) v[k] = ray[k + 1] / ray[0];
    out.push_back(std::move(v));
  }
  return out;
}

/// Range of r_target keeping all rows and r_target >= 0, other coordinates fixed.
inline std::pair<Rational, Rational> fiber_interval(const std::vector<FIneq>& rows, RatVector v, int target) {
  const auto j = static_cast<std::size_t>(target - 2);
  Rational lo = 0;
  std::optional<Rational> hi;
  v[j] = 0;
  for (const auto& q : rows) {
    const Rational rest = q.evaluate(v);
    const long c = q.coeffs[j];
    if (c > 0) {
      Rational b = -rest / c;
      if (b > lo) lo = b;
    } else if (c < 0) {
      Rational b = rest / -c;
      if (!hi || b < *hi) hi = b;
    } else if (sgn(rest) < 0) {
      throw InternalError("fixed coordinates already violate " + shape_string(q.shape));
    }
  }
  if (!hi) throw InternalError("fiber interval is unbounded");
  return {lo, *hi};
}

}  // namespace detail

/// Maximizes every r_j on every slice r_i = 0 of the K + Delta_E F-nef region.
inline ScanReport scan_bounds(int n) {
  if (n < 8 || n > 16) throw DomainError("scan_bounds supports 8 <= n <= 16, got " + std::to_string(n));
  ScanReport rep;
  rep.n = n;
  rep.inequalities = sym_fineqs(n);
  const int top = n / 2;
  std::set<RatVector> exceptional;
  for (int i = 2; i <= top; ++i) {
    const LPProblem base = detail::scan_problem(n, rep.inequalities, i);
    for (int j = 2; j <= top; ++j) {
      if (j == i) continue;
      LPProblem p = base;
      p.sense = Sense::maximize;
      p.objective.assign(base.variables, Rational(0));
      p.objective[static_cast<std::size_t>(j - 2)] = 1;
      const LPOutcome out = solve_lp(p);
      ScanEntry e{i, j, out.status, out.value, out.witness};
      if (out.status == LPStatus::optimal) {
        for (const auto& q : rep.inequalities)
          if (sgn(q.evaluate(e.vertex)) < 0) throw InternalError("scan vertex violates " + shape_string(q.shape));
        if (e.max == 1)
          for (auto& v : detail::face_vertices(n, rep.inequalities, i, j, e.max)) exceptional.insert(std::move(v));
        if (e.max > 1) {
          auto [lo, hi] = detail::fiber_interval(rep.inequalities, e.vertex, j);
          rep.violations.push_back({i, j, e.max, e.vertex, lo, hi});
        }
      }
      rep.entries.push_back(std::move(e));
    }
  }
  rep.exceptional.assign(exceptional.begin(), exceptional.end());
  return rep;
}

}  // namespace m0n
