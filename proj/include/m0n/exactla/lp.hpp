#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "m0n/exactla/rational.hpp"

namespace m0n {

enum class Sense { maximize, minimize, feasibility };

struct LinearRow {
  RatVector coeffs;
  Rational rhs;
};

/// Variables are free; `inequalities` mean coeffs . x >= rhs.
struct LPProblem {
  std::size_t variables = 0;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;
  RatVector objective;
  Sense sense = Sense::feasibility;

  void add_equality(RatVector coeffs, Rational rhs) { equalities.push_back({std::move(coeffs), std::move(rhs)}); }
  void add_inequality(RatVector coeffs, Rational rhs) {
    inequalities.push_back({std::move(coeffs), std::move(rhs)});
  }
  void add_nonnegativity() {
    for (std::size_t j = 0; j < variables; ++j) {
      RatVector e(variables, Rational(0));
      e[j] = 1;
      add_inequality(std::move(e), 0);
    }
  }
};

enum class LPStatus { optimal, infeasible, unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

/// Dual multipliers follow one convention for both certificate kinds. With
/// c_min = objective (minimize), -objective (maximize) or 0 (feasibility):
///   optimal:    sum eq_mult[k] e_k + sum ineq_mult[i] a_i = c_min and the
///               minimized value equals sum eq_mult[k] f_k + sum ineq_mult[i] b_i
///   infeasible: the same combination is 0 while its right-hand side is > 0
/// with every ineq_mult[i] >= 0.
struct LPOutcome {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  RatVector witness;
  RatVector ray;
  RatVector eq_multipliers;
  RatVector ineq_multipliers;
};

namespace detail {

class Simplex {
 public:
  explicit Simplex(const LPProblem& p) : p_(p) { build(); }

  LPOutcome run() {
    LPOutcome out;
    phase_one_objective();
    iterate(/*allow_artificial=*/false);
    if (sgn(obj_.back()) != 0) {  // phase-one optimum is -obj_.back() > 0
      out.status = LPStatus::infeasible;
      fill_multipliers(out, /*phase_one=*/true);
      return out;
    }
    drive_out_artificials();
    phase_two_objective();
    std::optional<std::size_t> unbounded_col = iterate(false);
    out.witness = primal();
    if (unbounded_col) {
      out.status = LPStatus::unbounded;
      out.ray = ray_from(*unbounded_col);
      return out;
    }
    out.status = LPStatus::optimal;
    Rational min_value = -obj_.back();
    out.value = p_.sense == Sense::maximize ? Rational(-min_value) : min_value;
    fill_multipliers(out, false);
    return out;
  }

 private:
  struct Column {
    enum Kind { plus, minus, bounded, slack } kind;
    std::size_t index;  // variable index, or inequality index for slack
  };

  void build() {
    const std::size_t nv = p_.variables;
    bound_row_.assign(nv, npos);
    std::vector<bool> row_is_bound(p_.inequalities.size(), false);
    for (std::size_t i = 0; i < p_.inequalities.size(); ++i) {
      const auto& r = p_.inequalities[i];
      if (sgn(r.rhs) != 0) continue;
      std::size_t nz = 0, where = 0;
      for (std::size_t j = 0; j < nv; ++j)
        if (sgn(r.coeffs[j]) != 0) ++nz, where = j;
      if (nz == 1 && sgn(r.coeffs[where]) > 0 && bound_row_[where] == npos) {
        bound_row_[where] = i;
        row_is_bound[i] = true;
      }
    }
    var_col_plus_.assign(nv, npos);
    var_col_minus_.assign(nv, npos);
    for (std::size_t j = 0; j < nv; ++j) {
      if (bound_row_[j] != npos) {
        var_col_plus_[j] = cols_.size();
        cols_.push_back({Column::bounded, j});
      } else {
        var_col_plus_[j] = cols_.size();
        cols_.push_back({Column::plus, j});
        var_col_minus_[j] = cols_.size();
        cols_.push_back({Column::minus, j});
      }
    }
    // Standard-form rows: equalities, then non-bound inequalities with a slack.
    struct RowRef {
      bool equality;
      std::size_t index;
    };
    std::vector<RowRef> refs;
    for (std::size_t k = 0; k < p_.equalities.size(); ++k) refs.push_back({true, k});
    for (std::size_t i = 0; i < p_.inequalities.size(); ++i)
      if (!row_is_bound[i]) refs.push_back({false, i});
    for (const auto& ref : refs)
      if (!ref.equality) {
        slack_col_of_ineq_.emplace_back(ref.index, cols_.size());
        cols_.push_back({Column::slack, ref.index});
      }
    structural_ = cols_.size();
    m_ = refs.size();
    width_ = structural_ + m_ + 1;
    rows_.assign(m_, RatVector(width_, Rational(0)));
    row_refs_equality_.resize(m_);
    row_refs_index_.resize(m_);
    sigma_.assign(m_, 1);
    for (std::size_t r = 0; r < m_; ++r) {
      const LinearRow& src = refs[r].equality ? p_.equalities[refs[r].index] : p_.inequalities[refs[r].index];
      row_refs_equality_[r] = refs[r].equality;
      row_refs_index_[r] = refs[r].index;
      RatVector& row = rows_[r];
      for (std::size_t j = 0; j < nv; ++j) {
        if (sgn(src.coeffs[j]) == 0) continue;
        row[var_col_plus_[j]] = src.coeffs[j];
        if (var_col_minus_[j] != npos) row[var_col_minus_[j]] = -src.coeffs[j];
      }
      if (!refs[r].equality)
        for (const auto& [ineq, col] : slack_col_of_ineq_)
          if (ineq == refs[r].index) row[col] = -1;
      row.back() = src.rhs;
      if (sgn(src.rhs) < 0) {
        sigma_[r] = -1;
        for (auto& x : row) x = -x;
      }
      row[structural_ + r] = 1;
    }
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) basis_[r] = structural_ + r;
  }

  void phase_one_objective() {
    obj_.assign(width_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = 0; j < structural_; ++j)
        if (sgn(rows_[r][j]) != 0) obj_[j] -= rows_[r][j];
      obj_.back() -= rows_[r].back();
    }
  }

  Rational cost(std::size_t col) const {
    if (col >= structural_ || p_.sense == Sense::feasibility) return 0;
    const Column& c = cols_[col];
    if (c.kind == Column::slack) return 0;
    Rational v = p_.objective[c.index];
    if (p_.sense == Sense::maximize) v = -v;
    return c.kind == Column::minus ? Rational(-v) : v;
  }

  void phase_two_objective() {
    obj_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < structural_; ++j) obj_[j] = cost(j);
    for (std::size_t r = 0; r < m_; ++r) {
      Rational cb = cost(basis_[r]);
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (sgn(rows_[r][j]) != 0) obj_[j] -= cb * rows_[r][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    RatVector& pr = rows_[r];
    Rational inv = 1 / pr[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(pr[j]) != 0) {
        pr[j] *= inv;
        nz.push_back(j);
      }
    auto eliminate = [&](RatVector& row) {
      if (sgn(row[c]) == 0) return;
      Rational f = row[c];
      for (std::size_t j : nz) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(obj_);
    basis_[r] = c;
  }

  // Bland's rule; returns the entering column when the problem is unbounded.
  std::optional<std::size_t> iterate(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? structural_ + m_ : structural_;
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < limit; ++j)
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == npos) return std::nullopt;
      std::size_t leave = npos;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(rows_[r][enter]) <= 0) continue;
        Rational ratio = rows_[r].back() / rows_[r][enter];
        if (leave == npos || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == npos) return enter;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < structural_) continue;
      for (std::size_t j = 0; j < structural_; ++j)
        if (sgn(rows_[r][j]) != 0) {
          pivot(r, j);
          break;
        }
    }
  }

  RatVector standard_point() const {
    RatVector z(structural_ + m_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) z[basis_[r]] = rows_[r].back();
    return z;
  }

  RatVector to_original(const RatVector& z) const {
    RatVector x(p_.variables, Rational(0));
    for (std::size_t j = 0; j < p_.variables; ++j) {
      x[j] = z[var_col_plus_[j]];
      if (var_col_minus_[j] != npos) x[j] -= z[var_col_minus_[j]];
    }
    return x;
  }

  RatVector primal() const { return to_original(standard_point()); }

  RatVector ray_from(std::size_t enter) const {
    RatVector z(structural_ + m_, Rational(0));
    z[enter] = 1;
    for (std::size_t r = 0; r < m_; ++r) z[basis_[r]] = -rows_[r][enter];
    return to_original(z);
  }

  void fill_multipliers(LPOutcome& out, bool phase_one) const {
    out.eq_multipliers.assign(p_.equalities.size(), Rational(0));
    out.ineq_multipliers.assign(p_.inequalities.size(), Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      // y_r = c_art - z_art, with c_art = 1 in phase one and 0 afterwards.
      Rational y = (phase_one ? Rational(1) : Rational(0)) - obj_[structural_ + r];
      Rational lambda = sigma_[r] < 0 ? Rational(-y) : y;
      if (row_refs_equality_[r])
        out.eq_multipliers[row_refs_index_[r]] = lambda;
      else
        out.ineq_multipliers[row_refs_index_[r]] = lambda;
    }
    for (std::size_t j = 0; j < p_.variables; ++j)
      if (bound_row_[j] != npos) out.ineq_multipliers[bound_row_[j]] = obj_[var_col_plus_[j]];
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const LPProblem& p_;
  std::vector<Column> cols_;
  std::vector<std::size_t> bound_row_, var_col_plus_, var_col_minus_;
  std::vector<std::pair<std::size_t, std::size_t>> slack_col_of_ineq_;
  std::size_t structural_ = 0, m_ = 0, width_ = 0;
  std::vector<RatVector> rows_;
  RatVector obj_;
  std::vector<std::size_t> basis_;
  std::vector<int> sigma_;
  std::vector<bool> row_refs_equality_;
  std::vector<std::size_t> row_refs_index_;
};

inline void check_shape(const LPProblem& p) {
  auto check = [&](const RatVector& v, const char* what) {
    if (v.size() != p.variables)
      throw ShapeError(std::string(what) + " row has length " + std::to_string(v.size()) + ", expected " +
                       std::to_string(p.variables));
  };
  for (const auto& r : p.equalities) check(r.coeffs, "equality");
  for (const auto& r : p.inequalities) check(r.coeffs, "inequality");
  if (p.sense != Sense::feasibility) check(p.objective, "objective");
}

inline RatVector min_objective(const LPProblem& p) {
  RatVector c(p.variables, Rational(0));
  if (p.sense == Sense::feasibility) return c;
  for (std::size_t j = 0; j < p.variables; ++j) c[j] = p.sense == Sense::maximize ? Rational(-p.objective[j]) : p.objective[j];
  return c;
}

}  // namespace detail

/// Returns a reason string when `out` is not an exactly valid answer for `p`.
inline std::optional<std::string> check_outcome(const LPProblem& p, const LPOutcome& out) {
  detail::check_shape(p);
  auto feasible = [&](const RatVector& x) -> std::optional<std::string> {
    if (x.size() != p.variables) return "witness has wrong length";
    for (std::size_t k = 0; k < p.equalities.size(); ++k)
      if (dot(p.equalities[k].coeffs, x) != p.equalities[k].rhs) return "witness violates equality " + std::to_string(k);
    for (std::size_t i = 0; i < p.inequalities.size(); ++i)
      if (dot(p.inequalities[i].coeffs, x) < p.inequalities[i].rhs)
        return "witness violates inequality " + std::to_string(i);
    return std::nullopt;
  };
  auto combination = [&](RatVector& lhs, Rational& rhs) -> std::optional<std::string> {
    if (out.eq_multipliers.size() != p.equalities.size() || out.ineq_multipliers.size() != p.inequalities.size())
      return "multiplier vectors have wrong length";
    lhs.assign(p.variables, Rational(0));
    rhs = 0;
    for (std::size_t k = 0; k < p.equalities.size(); ++k) {
      axpy(lhs, out.eq_multipliers[k], p.equalities[k].coeffs);
      rhs += out.eq_multipliers[k] * p.equalities[k].rhs;
    }
    for (std::size_t i = 0; i < p.inequalities.size(); ++i) {
      if (sgn(out.ineq_multipliers[i]) < 0) return "negative inequality multiplier " + std::to_string(i);
      axpy(lhs, out.ineq_multipliers[i], p.inequalities[i].coeffs);
      rhs += out.ineq_multipliers[i] * p.inequalities[i].rhs;
    }
    return std::nullopt;
  };
  RatVector lhs;
  Rational rhs;
  switch (out.status) {
    case LPStatus::optimal: {
      if (auto e = feasible(out.witness)) return e;
      if (auto e = combination(lhs, rhs)) return e;
      if (lhs != detail::min_objective(p)) return "dual combination does not reproduce the objective";
      Rational min_value = p.sense == Sense::maximize ? Rational(-out.value) : out.value;
      if (p.sense == Sense::feasibility) min_value = 0;
      if (rhs != min_value) return "dual value differs from the reported optimum";
      if (p.sense != Sense::feasibility && dot(p.objective, out.witness) != out.value)
        return "witness does not attain the reported value";
      return std::nullopt;
    }
    case LPStatus::infeasible: {
      if (auto e = combination(lhs, rhs)) return e;
      if (!is_zero(lhs)) return "infeasibility combination is not identically zero";
      if (sgn(rhs) <= 0) return "infeasibility combination does not yield 0 >= positive";
      return std::nullopt;
    }
    case LPStatus::unbounded: {
      if (p.sense == Sense::feasibility) return "feasibility problems cannot be unbounded";
      if (auto e = feasible(out.witness)) return e;
      for (const auto& r : p.equalities)
        if (sgn(dot(r.coeffs, out.ray)) != 0) return "ray leaves an equality";
      for (const auto& r : p.inequalities)
        if (sgn(dot(r.coeffs, out.ray)) < 0) return "ray leaves an inequality";
      Rational gain = dot(p.objective, out.ray);
      if (p.sense == Sense::maximize ? sgn(gain) <= 0 : sgn(gain) >= 0) return "ray does not improve the objective";
      return std::nullopt;
    }
  }
  return "unknown status";
}

/// Exact two-phase simplex with Bland's rule. The returned certificate is
/// re-checked before returning; a failed check is an InternalError.
inline LPOutcome solve_lp(const LPProblem& problem) {
  detail::check_shape(problem);
  LPOutcome out = detail::Simplex(problem).run();
  if (auto err = check_outcome(problem, out)) throw InternalError("LP certificate check failed: " + *err);
  return out;
}

}  // namespace m0n
