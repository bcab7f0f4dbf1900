#pragma once

#include <optional>
#include <string>
#include <vector>

#include "m0n/exactla/lp.hpp"
#include "m0n/intersect/fnef.hpp"
#include "m0n/picard/effective.hpp"
#include "m0n/symscan/fineqs.hpp"
#include "m0n/symscan/orbit_forms.hpp"

namespace m0n {

/// y with y . nf(orbit) >= 0 for every boundary orbit and y . nf(D) < 0. For n
/// beyond the context range y is a vector over B-coordinates instead.
struct SeparationCertificate {
  RatVector y;
  Rational value;  // y . nf(D)
};

struct MembershipResult {
  bool member = false;
  std::vector<std::pair<BoundaryClass, Rational>> orbit_coefficients;  // representative -> coefficient
  std::optional<EffectiveDecomposition> decomposition;
  std::optional<SeparationCertificate> separator;
};

namespace detail {

inline MembershipResult membership_b_coordinates(const DivisorClass& d) {
  const int n = d.n();
  const SymClass r = sym_coords(d);
  MembershipResult out;
  for (int j = 2; 2 * j <= n; ++j)
    if (sgn(r.at(j)) < 0) {
      RatVector y(r.r.size(), Rational(0));
      y[static_cast<std::size_t>(j - 2)] = 1;
      out.separator = SeparationCertificate{y, r.at(j)};
      return out;
    }
  out.member = true;
  BoundaryCombination c{n, {}};
  for (const auto& b : boundary_classes(n)) c.add(b, r.at(b.size()));
  for (int j = 2; 2 * j <= n; ++j) {
    Mask s = full_mask(j);
    out.orbit_coefficients.emplace_back(BoundaryClass(n, s), r.at(j));
  }
  out.decomposition = EffectiveDecomposition{d, std::move(c)};
  return out;
}

}  // namespace detail

/// Is D a nonnegative combination of boundary classes? Variables are one
/// coefficient per group orbit (symmetrizing any solution keeps it feasible).
inline MembershipResult effective_membership(const DivisorClass& d, const SymmetryGroup& g) {
  const int n = d.n();
  if (g.n() != n) throw DomainError("group and divisor disagree on n");
  if (n > kMaxContextN) {
    if (g.cells().size() != 1) throw DomainError("beyond n = 10 membership is only available for the full group");
    return detail::membership_b_coordinates(d);
  }
  if (g.is_trivial() && n > 9) throw DomainError("membership without symmetry is limited to n <= 9");
  const auto& ctx = pic_context(n);
  require_invariant(ctx, d, g);
  const auto orbs = g.boundary_orbits();
  std::vector<RatVector> cols;
  for (const auto& [b, size] : orbs) cols.push_back(ctx.normal_form(orbit_sum(g, b)));
  const RatVector target = ctx.normal_form(d);

  LPProblem p;
  p.variables = orbs.size();
  for (std::size_t r = 0; r < ctx.dim(); ++r) {
    RatVector row(p.variables);
    for (std::size_t k = 0; k < p.variables; ++k) row[k] = cols[k][r];
    p.add_equality(std::move(row), target[r]);
  }
  p.add_nonnegativity();
  const LPOutcome lp = solve_lp(p);

  MembershipResult out;
  if (lp.status != LPStatus::optimal) {
    RatVector y(ctx.dim());
    for (std::size_t r = 0; r < y.size(); ++r) y[r] = -lp.eq_multipliers[r];
    out.separator = SeparationCertificate{y, dot(y, target)};
    return out;
  }
  out.member = true;
  BoundaryCombination c{n, {}};
  for (std::size_t k = 0; k < orbs.size(); ++k) {
    out.orbit_coefficients.emplace_back(orbs[k].first, lp.witness[k]);
    if (sgn(lp.witness[k]) == 0) continue;
    const DivisorClass o = orbit_sum(g, orbs[k].first);
    for (const auto& [sym, coef] : o.terms()) c.add(BoundaryClass(n, sym.rep), lp.witness[k] * coef);
  }
  out.decomposition = EffectiveDecomposition{d, std::move(c)};
  return out;
}

/// Independent check of a membership answer using only normal forms.
inline std::optional<std::string> check_membership(const DivisorClass& d, const SymmetryGroup& g, const MembershipResult& m) {
  const int n = d.n();
  if (m.member) {
    if (!m.decomposition) return "member without decomposition";
    if (n <= kMaxContextN) return check_decomposition(pic_context(n), *m.decomposition);
    if (!m.decomposition->combination.nonnegative()) return "negative coefficient";
    if (!(sym_coords(m.decomposition->combination.divisor()) == sym_coords(d))) return "B-coordinates differ";
    return std::nullopt;
  }
  if (!m.separator) return "non-member without certificate";
  const auto& y = m.separator->y;
  if (n > kMaxContextN) {
    const SymClass r = sym_coords(d);
    if (y.size() != r.r.size()) return "certificate has the wrong length";
    for (const auto& v : y)
      if (sgn(v) < 0) return "certificate is negative on some B_j";
    if (sgn(dot(y, r.r)) >= 0) return "certificate does not separate D";
    return std::nullopt;
  }
  const auto& ctx = pic_context(n);
  if (y.size() != ctx.dim()) return "certificate has the wrong length";
  for (const auto& [b, size] : g.boundary_orbits())
    if (sgn(dot(y, ctx.normal_form(orbit_sum(g, b)))) < 0) return "certificate is negative on orbit of delta" + b.str();
  if (sgn(dot(y, ctx.normal_form(d))) >= 0) return "certificate does not separate D";
  return std::nullopt;
}

struct OnePointDecomposition {
  RatVector coords;  // coefficients of delta^{x,1}_j, j = 1..n-3
  std::vector<std::optional<FormCombination>> certificates;  // per coordinate, over orbit_forms(onepoint_basis(n))
  BoundaryCombination combination;
  std::optional<std::string> falsified;

  bool effective() const { return !falsified.has_value(); }
};

inline const std::vector<OrbitForm>& onepoint_forms(int n) {
  static std::map<int, std::vector<OrbitForm>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, orbit_forms(onepoint_basis(n), {{n, "x"}})).first;
  return it->second;
}

/// Coordinates in the independent basis {delta^{x,1}_j}, each with a proof of
/// nonnegativity over all F-nef invariant classes.
inline OnePointDecomposition onepoint_decompose(const DivisorClass& d) {
  const int n = d.n();
  if (n < 5 || n > kMaxContextN) throw DomainError("onepoint_decompose needs 5 <= n <= 10");
  const auto basis = onepoint_basis(n);
  const auto& ctx = pic_context(n);
  const auto coords = invariant_coords(ctx, d, basis);
  const auto nef = fnef(d, basis.group);
  if (!nef.nef)
    throw PreconditionError("class is not F-nef: " + nef.witness->str() + " pairs to " + to_string(nef.value));
  OnePointDecomposition out;
  out.coords = coords.coords;
  std::vector<RatVector> rows;
  for (const auto& f : onepoint_forms(n)) rows.push_back(f.form);
  out.combination.n = n;
  for (std::size_t j = 0; j < out.coords.size(); ++j) {
    RatVector e(out.coords.size(), Rational(0));
    e[j] = 1;
    out.certificates.push_back(nonnegative_combination(rows, e));
    const Rational v = out.coords[j];
    if (sgn(v) < 0 && !out.falsified)
      out.falsified = "coefficient of " + basis.names[j] + " is " + to_string(v);
    for (const auto& [sym, c] : basis.classes[j].terms()) out.combination.add(BoundaryClass(n, sym.rep), v * c);
  }
  if (!ctx.equivalent(out.combination.divisor(), d)) throw InternalError("one-point expression is not equivalent to the input");
  return out;
}

}  // namespace m0n
