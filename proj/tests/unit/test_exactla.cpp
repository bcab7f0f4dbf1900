#include <gtest/gtest.h>

#include <random>

#include "m0n/exactla/fourier_motzkin.hpp"
#include "m0n/exactla/lp.hpp"
#include "m0n/exactla/matrix.hpp"
#include "m0n/exactla/rays.hpp"
#include "oracles/brute_polyhedra.hpp"

using namespace m0n;

namespace {

RatVector v(std::initializer_list<long> xs) {
  RatVector r;
  for (long x : xs) r.push_back(Rational(x));
  return r;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), rat(3, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(to_string(rat(-4, 6)), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(rat(1, 0), DomainError);
}

TEST(Rational, PrimitiveInteger) {
  auto p = primitive_integer({rat(2, 3), rat(-4, 3), Rational(0)});
  EXPECT_EQ(p, (std::vector<Integer>{1, -2, 0}));
}

TEST(Rref, ProportionalRows) {
  auto r = rref(RatMatrix::from_rows({v({1, 2}), v({2, 4})}, 2));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.basis_columns, (std::vector<std::size_t>{0}));
}

TEST(Rref, IdentityIsFixed) {
  auto id = RatMatrix::identity(3);
  auto r = rref(id);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.reduced, id);
}

TEST(Rref, EmptyMatrix) { EXPECT_EQ(rref(RatMatrix(0, 0)).rank, 0u); }

TEST(Rref, IdempotentAndRankBounded) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + gen() % 6, cols = 1 + gen() % 6;
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(gen) * (trial % 3 == 0 && j == 0 ? 0 : 1);
    auto r = rref(m);
    EXPECT_LE(r.rank, std::min(rows, cols));
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
    std::vector<RatVector> rs;
    for (std::size_t i = 0; i < rows; ++i) rs.push_back(m.row(i));
    EXPECT_EQ(r.rank, oracle::rank_of(rs));
  }
}

TEST(SolveLinear, KernelAndParticular) {
  auto a = RatMatrix::from_rows({v({1, 1, 0}), v({0, 1, 1})}, 3);
  auto s = solve_linear(a, v({2, 3}));
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(multiply(a, s.particular), v({2, 3}));
  ASSERT_EQ(s.kernel.size(), 1u);
  EXPECT_TRUE(is_zero(multiply(a, s.kernel[0])));
  EXPECT_FALSE(solve_linear(RatMatrix::from_rows({v({1}), v({1})}, 1), v({0, 1})).consistent);
}

TEST(Lp, MaximizeOnInterval) {
  LPProblem p;
  p.variables = 1;
  p.add_inequality(v({-1}), -1);
  p.add_inequality(v({1}), 0);
  p.objective = v({1});
  p.sense = Sense::maximize;
  auto out = solve_lp(p);
  EXPECT_EQ(out.status, LPStatus::optimal);
  EXPECT_EQ(out.value, Rational(1));
  EXPECT_FALSE(check_outcome(p, out));
}

TEST(Lp, InfeasibleWithCertificate) {
  LPProblem p;
  p.variables = 1;
  p.add_inequality(v({1}), 1);
  p.add_inequality(v({-1}), 0);
  auto out = solve_lp(p);
  ASSERT_EQ(out.status, LPStatus::infeasible);
  // mu_1 * (x >= 1) + mu_2 * (-x >= 0) gives 0 >= mu_1 > 0.
  EXPECT_EQ(out.ineq_multipliers[0], out.ineq_multipliers[1]);
  EXPECT_GT(out.ineq_multipliers[0], 0);
}

TEST(Lp, UnboundedRay) {
  LPProblem p;
  p.variables = 2;
  p.add_nonnegativity();
  p.add_inequality(v({1, -1}), -1);
  p.objective = v({1, 1});
  p.sense = Sense::maximize;
  auto out = solve_lp(p);
  ASSERT_EQ(out.status, LPStatus::unbounded);
  EXPECT_FALSE(check_outcome(p, out));
}

TEST(Lp, EqualitiesAndFreeVariables) {
  LPProblem p;
  p.variables = 3;
  p.add_equality(v({1, 1, 1}), 1);
  p.add_inequality(v({1, 0, 0}), -2);
  p.add_inequality(v({0, 1, 0}), rat(1, 3));
  p.add_inequality(v({0, 0, 1}), 0);
  p.objective = v({1, 0, 0});
  p.sense = Sense::minimize;
  auto out = solve_lp(p);
  EXPECT_EQ(out.status, LPStatus::optimal);
  EXPECT_EQ(out.value, Rational(-2));
}

TEST(Lp, CheckerRejectsForgedCertificates) {
  LPProblem p;
  p.variables = 1;
  p.add_inequality(v({1}), 0);
  p.add_inequality(v({-1}), -1);
  p.objective = v({1});
  p.sense = Sense::maximize;
  auto out = solve_lp(p);
  ASSERT_FALSE(check_outcome(p, out));
  auto forged = out;
  forged.value = 2;
  EXPECT_TRUE(check_outcome(p, forged));
  forged = out;
  forged.ineq_multipliers[1] += 1;
  EXPECT_TRUE(check_outcome(p, forged));
  forged = out;
  forged.status = LPStatus::infeasible;
  EXPECT_TRUE(check_outcome(p, forged));
}

TEST(Lp, ShapeErrors) {
  LPProblem p;
  p.variables = 2;
  p.add_inequality(v({1}), 0);
  EXPECT_THROW(solve_lp(p), ShapeError);
}

// Random bounded LPs: simplex optimum vs vertex enumeration vs Fourier-Motzkin.
TEST(Lp, AgreesWithVertexEnumerationAndFourierMotzkin) {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> coef(-4, 4);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = 2 + trial % 3;
    LPProblem p;
    p.variables = d;
    std::vector<RatVector> rows;
    RatVector rhs;
    for (std::size_t j = 0; j < d; ++j) {  // box keeps everything bounded
      RatVector lo(d, Rational(0)), hi(d, Rational(0));
      lo[j] = 1;
      hi[j] = -1;
      rows.push_back(lo);
      rhs.push_back(-5);
      rows.push_back(hi);
      rhs.push_back(-5);
    }
    for (int k = 0; k < 3 + trial % 4; ++k) {
      RatVector r(d);
      for (auto& x : r) x = coef(gen);
      rows.push_back(r);
      rhs.push_back(rat(coef(gen), 1 + static_cast<long>(gen() % 3)));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) p.add_inequality(rows[i], rhs[i]);
    p.objective.resize(d);
    for (auto& x : p.objective) x = coef(gen);
    p.sense = trial % 2 ? Sense::maximize : Sense::minimize;
    auto out = solve_lp(p);
    auto verts = oracle::vertices(rows, rhs, d);
    auto fm = fourier_motzkin_bounds(p);
    if (verts.empty()) {
      EXPECT_EQ(out.status, LPStatus::infeasible);
      EXPECT_FALSE(fm.feasible);
      ++infeasible;
      continue;
    }
    ASSERT_EQ(out.status, LPStatus::optimal);
    ++optimal;
    Rational best = dot(p.objective, verts[0]);
    for (const auto& x : verts) {
      Rational val = dot(p.objective, x);
      if (p.sense == Sense::maximize ? val > best : val < best) best = val;
    }
    EXPECT_EQ(out.value, best);
    ASSERT_TRUE(fm.feasible);
    EXPECT_EQ(p.sense == Sense::maximize ? *fm.upper : *fm.lower, best);
  }
  EXPECT_GT(optimal, 20);
  EXPECT_GT(infeasible, 0);
}

TEST(FourierMotzkin, EqualityFixedObjective) {
  LPProblem p;
  p.variables = 2;
  p.add_equality(v({1, 1}), 3);
  p.add_inequality(v({1, 0}), 0);
  p.objective = v({2, 2});
  p.sense = Sense::maximize;
  auto fm = fourier_motzkin_bounds(p);
  ASSERT_TRUE(fm.feasible);
  EXPECT_EQ(*fm.upper, Rational(6));
  EXPECT_EQ(*fm.lower, Rational(6));
}

TEST(Rays, Orthant) {
  auto g = extreme_rays({v({1, 0}), v({0, 1})}, 2);
  EXPECT_EQ(g.rays, (std::vector<RatVector>{v({0, 1}), v({1, 0})}));
  EXPECT_TRUE(g.lineality.empty());
}

TEST(Rays, Wedge) {
  auto g = extreme_rays({v({1, 1}), v({1, -1})}, 2);
  EXPECT_EQ(g.rays, (std::vector<RatVector>{v({1, -1}), v({1, 1})}));
}

TEST(Rays, HalfPlaneHasLineality) {
  auto g = extreme_rays({v({1, 0})}, 2);
  EXPECT_EQ(g.rays, (std::vector<RatVector>{v({1, 0})}));
  EXPECT_EQ(g.lineality, (std::vector<RatVector>{v({0, 1})}));
}

TEST(Rays, CompleteOnRandomThreeDimensionalCones) {
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<RatVector> rows{v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})};  // pointed
    for (int k = 0; k < 1 + trial % 5; ++k) rows.push_back(v({coef(gen), coef(gen), coef(gen)}));
    std::shuffle(rows.begin(), rows.end(), gen);
    auto g = extreme_rays(rows, 3);
    ASSERT_TRUE(g.lineality.empty());
    for (const auto& r : g.rays)
      for (const auto& a : rows) EXPECT_GE(dot(a, r), 0);
    std::set<RatVector> got(g.rays.begin(), g.rays.end());
    EXPECT_EQ(got.size(), g.rays.size());
    EXPECT_EQ(got, oracle::rays3(rows)) << "trial " << trial;
  }
}
