#pragma once

#include <string>
#include <vector>

#include "m0n/exactla/lp.hpp"
#include "m0n/intersect/pairing.hpp"
#include "m0n/picard/invariant.hpp"

namespace m0n {

/// One F-curve orbit as a linear form on invariant coordinates.
struct OrbitForm {
  FCurve curve;
  std::string label;
  RatVector form;  // form[k] = basis.classes[k] . curve
};

/// Blocks by size, with the fixed labels of the group as subscripts, e.g. "(3_x,2_y,2,1)".
inline std::string orbit_label(const FCurve& f, const SymmetryGroup& g, const std::vector<std::pair<int, std::string>>& names = {}) {
  std::vector<std::pair<int, std::string>> parts;
  for (Mask b : f.blocks) {
    std::string tag;
    for (Mask c : g.cells())
      if (popcount(c) == 1 && (b & c)) {
        const int l = lowest_label(c);
        std::string name = std::to_string(l);
        for (const auto& [label, nm] : names)
          if (label == l) name = nm;
        tag += name;
      }
    parts.emplace_back(popcount(b), tag);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second.size() > b.second.size() || (a.second.size() == b.second.size() && a.second < b.second);
  });
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? "," : "") + std::to_string(parts[i].first) + (parts[i].second.empty() ? "" : "_" + parts[i].second);
  return s + ")";
}

inline std::vector<OrbitForm> orbit_forms(const InvariantBasis& basis,
                                          const std::vector<std::pair<int, std::string>>& names = {}) {
  std::vector<OrbitForm> out;
  for (const auto& [f, size] : basis.group.fcurve_orbits()) {
    RatVector row(basis.classes.size());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = dot(basis.classes[k], f);
    out.push_back({f, orbit_label(f, basis.group, names), std::move(row)});
  }
  return out;
}

/// target = sum lambda_i forms[i] + sum mu_j hypotheses[j], all multipliers >= 0.
struct FormCombination {
  std::vector<std::pair<std::size_t, Rational>> forms;       // (index into the form list, lambda)
  std::vector<std::pair<std::size_t, Rational>> hypotheses;  // (index, mu)
};

/// Sparse nonnegative combination (an LP vertex), or nullopt if none exists.
inline std::optional<FormCombination> nonnegative_combination(const std::vector<RatVector>& forms,
                                                              const RatVector& target,
                                                              const std::vector<RatVector>& hypotheses = {}) {
  const std::size_t nf = forms.size(), nh = hypotheses.size(), dim = target.size();
  LPProblem p;
  p.variables = nf + nh;
  for (std::size_t r = 0; r < dim; ++r) {
    RatVector row(p.variables);
    for (std::size_t i = 0; i < nf; ++i) row[i] = forms[i][r];
    for (std::size_t j = 0; j < nh; ++j) row[nf + j] = hypotheses[j][r];
    p.add_equality(std::move(row), target[r]);
  }
  p.add_nonnegativity();
  p.sense = Sense::minimize;
  p.objective.assign(p.variables, Rational(1));
  const LPOutcome out = solve_lp(p);
  if (out.status != LPStatus::optimal) return std::nullopt;
  FormCombination c;
  for (std::size_t i = 0; i < nf; ++i)
    if (sgn(out.witness[i]) != 0) c.forms.emplace_back(i, out.witness[i]);
  for (std::size_t j = 0; j < nh; ++j)
    if (sgn(out.witness[nf + j]) != 0) c.hypotheses.emplace_back(j, out.witness[nf + j]);
  return c;
}

/// Recomputes sum lambda forms + sum mu hypotheses and compares with target.
inline bool check_combination(const std::vector<RatVector>& forms, const std::vector<RatVector>& hypotheses,
                              const FormCombination& c, const RatVector& target) {
  RatVector acc(target.size(), Rational(0));
  for (const auto& [i, l] : c.forms) {
    if (i >= forms.size() || sgn(l) < 0) return false;
    axpy(acc, l, forms[i]);
  }
  for (const auto& [j, l] : c.hypotheses) {
    if (j >= hypotheses.size() || sgn(l) < 0) return false;
    axpy(acc, l, hypotheses[j]);
  }
  return acc == target;
}

}  // namespace m0n
