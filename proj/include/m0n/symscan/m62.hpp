#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "m0n/exactla/rays.hpp"
#include "m0n/intersect/fnef.hpp"
#include "m0n/picard/effective.hpp"
#include "m0n/symscan/orbit_forms.hpp"

namespace m0n {

namespace m62 {

inline const std::vector<std::pair<int, std::string>>& point_names() {
  static const std::vector<std::pair<int, std::string>> v{{kX, "x"}, {kY, "y"}};
  return v;
}

inline const std::vector<OrbitForm>& forms() {
  static const std::vector<OrbitForm> f = orbit_forms(m62_basis(), point_names());
  return f;
}

inline std::vector<RatVector> form_rows() {
  std::vector<RatVector> rows;
  for (const auto& f : forms()) rows.push_back(f.form);
  return rows;
}

/// delta_2 in terms of the other nine invariant classes (solved from the delta_xy average).
/// delta_2 = sum of these multiples of the named classes.
inline const std::vector<std::pair<std::string, Rational>>& delta2_substitution() {
  static const std::vector<std::pair<std::string, Rational>> s{
      {"x1", rat(5, 2)}, {"y1", rat(5, 2)}, {"x2", Rational(4)},   {"y2", Rational(4)}, {"x3", rat(9, 2)},
      {"xy1", Rational(-10)}, {"xy2", Rational(-6)}, {"3", Rational(-3)}, {"xy", Rational(-15)}};
  return s;
}

inline std::size_t index_of(const std::string& name) {
  const auto& v = names();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] == name) return k;
  throw DomainError("unknown invariant class '" + name + "'");
}

}  // namespace m62

struct M62Census {
  std::size_t orbits = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> duplicate_groups;  // orbits with proportional forms
  std::vector<std::size_t> zero_forms;
  std::vector<std::size_t> facets;
  struct Redundant {
    std::size_t index;
    FormCombination from_facets;  // the redundant form as a nonnegative sum of facet forms
  };
  std::vector<Redundant> redundant;
  std::vector<RatVector> rays;  // extreme rays of the invariant F-nef cone, in m62 coordinates
};

/// Census of orbit F-inequalities on the nine invariant coordinates.
inline M62Census m62_census() {
  M62Census c;
  const auto& fs = m62::forms();
  const auto rows = m62::form_rows();
  c.orbits = fs.size();
  for (const auto& f : fs) c.labels.push_back(f.label);
  std::map<std::vector<Integer>, std::vector<std::size_t>> by_direction;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (is_zero(rows[i])) {
      c.zero_forms.push_back(i);
      continue;
    }
    by_direction[primitive_integer(rows[i])].push_back(i);
  }
  for (const auto& [dir, ids] : by_direction)
    if (ids.size() > 1) c.duplicate_groups.push_back(ids);

  const std::size_t dim = m62::names().size();
  const auto gens = extreme_rays(rows, dim);
  if (!gens.lineality.empty()) throw InternalError("invariant F-nef cone is not pointed");
  c.rays = gens.rays;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (is_zero(rows[i])) continue;
    std::vector<RatVector> on;
    for (const auto& r : c.rays)
      if (sgn(dot(rows[i], r)) == 0) on.push_back(r);
    RatMatrix m(on.size(), dim);
    for (std::size_t a = 0; a < on.size(); ++a)
      for (std::size_t b = 0; b < dim; ++b) m(a, b) = on[a][b];
    if (rref(m).rank + 1 == dim) c.facets.push_back(i);
  }
  std::vector<RatVector> facet_rows;
  for (auto i : c.facets) facet_rows.push_back(rows[i]);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (is_zero(rows[i]) || std::find(c.facets.begin(), c.facets.end(), i) != c.facets.end()) continue;
    auto comb = nonnegative_combination(facet_rows, rows[i]);
    if (!comb) throw InternalError("non-facet form " + fs[i].label + " is not implied by the facets");
    for (auto& [k, l] : comb->forms) k = c.facets[k];
    c.redundant.push_back({i, *comb});
  }
  return c;
}

/// Nonnegativity proof of one output coefficient, valid for every F-nef input in its branch.
struct CoefficientCertificate {
  std::string name;
  RatVector functional;  // coefficient as a linear form on the nine coordinates
  std::optional<FormCombination> proof;  // forms index m62::forms(); hypothesis 0 is b_2 <= 0
};

struct M62Decomposition {
  int branch = 1;  // 1: b_2 >= 0, 2: b_2 < 0 with delta_2 substituted
  RatVector b;     // nine coordinates of D
  std::vector<std::pair<std::string, Rational>> coefficients;  // over the ten invariant classes
  std::vector<CoefficientCertificate> certificates;
  BoundaryCombination combination;
  std::optional<std::string> falsified;  // set when some coefficient is negative

  bool effective() const { return !falsified.has_value(); }
};

namespace detail {

inline std::vector<CoefficientCertificate> m62_certificates(int branch) {
  const std::size_t dim = m62::names().size();
  const auto rows = m62::form_rows();
  const std::size_t i2 = m62::index_of("2");
  std::vector<RatVector> hyp;
  if (branch == 2) {
    RatVector h(dim, Rational(0));
    h[i2] = -1;
    hyp.push_back(h);
  }
  std::vector<CoefficientCertificate> out;
  auto add = [&](const std::string& name, RatVector g) {
    auto proof = nonnegative_combination(rows, g, hyp);
    if (proof && !check_combination(rows, hyp, *proof, g)) throw InternalError("certificate for " + name + " does not add up");
    out.push_back({name, std::move(g), std::move(proof)});
  };
  if (branch == 1) {
    for (std::size_t k = 0; k < dim; ++k) {
      RatVector e(dim, Rational(0));
      e[k] = 1;
      add(m62::names()[k], e);
    }
    return out;
  }
  for (const auto& [name, s] : m62::delta2_substitution()) {
    RatVector g(dim, Rational(0));
    if (name != "xy") g[m62::index_of(name)] = 1;
    g[i2] += s;
    add(name, g);
  }
  return out;
}

inline const std::vector<CoefficientCertificate>& m62_certificates_cached(int branch) {
  static const auto one = m62_certificates(1);
  static const auto two = m62_certificates(2);
  return branch == 1 ? one : two;
}

}  // namespace detail

/// Certificate that b_2 >= 0 on the whole invariant F-nef cone, if one exists.
inline std::optional<FormCombination> m62_b2_nonnegative() {
  RatVector e(m62::names().size(), Rational(0));
  e[m62::index_of("2")] = 1;
  return nonnegative_combination(m62::form_rows(), e);
}

/// Effective expression of an F-nef class on M_{0,8} invariant under S_6 x 1 x 1.
/// force_branch = 2 runs the delta_2 substitution even when b_2 >= 0.
inline M62Decomposition m62_decompose(const DivisorClass& d, int force_branch = 0) {
  if (d.n() != 8) throw DomainError("m62_decompose works on M_{0,8}");
  if (force_branch != 0 && force_branch != 1 && force_branch != 2) throw DomainError("branch must be 1 or 2");
  const auto& ctx = pic_context(8);
  const auto coords = invariant_coords(ctx, d, m62_basis());
  const auto nef = fnef(d, SymmetryGroup::sym(8, 6));
  if (!nef.nef)
    throw PreconditionError("class is not F-nef: " + nef.witness->str() + " pairs to " + to_string(nef.value));

  M62Decomposition out;
  out.b = coords.coords;
  const Rational b2 = out.b[m62::index_of("2")];
  out.branch = force_branch ? force_branch : (sgn(b2) >= 0 ? 1 : 2);
  out.certificates = detail::m62_certificates_cached(out.branch);
  DivisorClass expr(8);
  for (const auto& cert : out.certificates) {
    const Rational v = dot(cert.functional, out.b);
    out.coefficients.emplace_back(cert.name, v);
    expr += v * m62::named(cert.name);
    if (sgn(v) < 0 && !out.falsified) {
      out.falsified = "coefficient of delta_" + cert.name + " is " + to_string(v) +
                      (cert.proof ? " although a nonnegativity proof exists (branch hypothesis violated)"
                                  : "; no nonnegative combination of orbit F-inequalities bounds it");
    }
  }
  if (!ctx.equivalent(expr, d)) throw InternalError("m62 expression is not equivalent to the input");
  out.combination.n = 8;
  for (const auto& [name, v] : out.coefficients) {
    const DivisorClass orbit = m62::named(name);
    for (const auto& [sym, c] : orbit.terms()) out.combination.add(BoundaryClass(8, sym.rep), v * c);
  }
  return out;
}

}  // namespace m0n
