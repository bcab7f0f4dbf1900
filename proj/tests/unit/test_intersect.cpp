#include <gtest/gtest.h>

#include <random>

#include "m0n/intersect/families.hpp"
#include "m0n/intersect/fnef.hpp"
#include "oracles/six_point.hpp"

using namespace m0n;

namespace {

FCurve curve(int n, const std::vector<std::vector<int>>& blocks) { return FCurve(n, blocks); }

Mask m(std::initializer_list<int> labels) { return mask_of(std::vector<int>(labels)); }

}  // namespace

TEST(Dot, SixPointExamples) {
  const FCurve f = curve(6, {{1}, {2}, {3, 4}, {5, 6}});
  EXPECT_EQ(dot(psi_class(6, 1), f), 1);
  EXPECT_EQ(dot(delta_class(6, m({5, 6})), f), -1);
  EXPECT_EQ(dot(delta_class(6, m({1, 3, 4})), f), 1);
  EXPECT_EQ(dot(delta_class(6, m({1, 3})), f), 0);
  EXPECT_EQ(dot(kappa1(6), f), 1);
  EXPECT_EQ(dot(canonical_class(6), f), 0);
  EXPECT_EQ(dot(canonical_class(6), curve(6, {{1}, {2}, {3}, {4, 5, 6}})), -1);
}

TEST(Dot, RelationsPairToZero) {
  for (int n = 4; n <= 7; ++n) {
    const auto curves = fcurves(n);
    for (const auto& r : pic_context(n).relations())
      for (const auto& f : curves) ASSERT_EQ(dot(r, f), 0) << n << " " << f.str();
  }
}

TEST(Dot, EqualsDegreeOfPullback) {
  std::mt19937 gen(11);
  for (int n = 4; n <= 7; ++n) {
    const auto d = oracle::random_divisor(n, gen);
    for (const auto& f : fcurves(n)) ASSERT_EQ(dot(d, f), degree_m04(pullback(d, as_restriction(f)))) << f.str();
  }
}

TEST(Dot, CanonicalIsTwoMinusSingletons) {
  for (int n = 4; n <= 9; ++n) {
    const auto k = canonical_class(n);
    for (const auto& f : fcurves(n)) ASSERT_EQ(dot(k, f), Rational(2 - f.singleton_blocks())) << f.str();
  }
}

TEST(Pullback, SixPointExamples) {
  const auto nu = restriction(6, {{1}, {2}, {3, 4}, {5, 6}});
  EXPECT_EQ(pullback(delta_class(6, m({5, 6})), nu), DivisorClass(4).add_psi(4, -1));
  EXPECT_EQ(pullback(delta_class(6, m({1, 3, 4})), nu), DivisorClass(4).add_delta(m({1, 3}), 1));
  EXPECT_EQ(pullback(psi_class(6, 3), nu), DivisorClass(4));
  const auto lhs = pullback(canonical_class(6), nu);
  const auto rhs = canonical_class(4) + psi_class(4, 3) + psi_class(4, 4);
  EXPECT_TRUE(pic_context(4).equivalent(lhs, rhs));
  EXPECT_EQ(degree_m04(lhs), 0);
  EXPECT_THROW(pullback(psi_class(5, 1), nu), DomainError);
}

TEST(Pullback, RelationsPullBackToZero) {
  const auto nu = restriction(7, {{1, 2}, {3}, {4, 5}, {6}, {7}});
  const auto& target = pic_context(5);
  for (const auto& r : pic_context(7).relations()) ASSERT_TRUE(is_zero(target.normal_form(pullback(r, nu))));
}

TEST(Pullback, CompositionMatchesIteration) {
  std::mt19937 gen(5);
  const auto outer = restriction(8, {{1, 2}, {3}, {4}, {5, 6}, {7}, {8}});
  const auto inner = restriction(6, {{1}, {2, 3}, {4}, {5, 6}});
  const auto d = oracle::random_divisor(8, gen);
  EXPECT_TRUE(pic_context(4).equivalent(pullback(pullback(d, outer), inner), pullback(d, compose(outer, inner))));
}

TEST(ForgetPullback, RelationsAndProjectionFormula) {
  for (int n = 5; n <= 7; ++n)
    for (int p = 1; p <= n; ++p)
      for (const auto& r : pic_context(n - 1).relations())
        ASSERT_TRUE(is_zero(pic_context(n).normal_form(forget_pullback(r, p))));
  // pi^* D is trivial on F-curves whose forgotten point is a singleton on a
  // curve contracted by the projection: ({p}, {a}, B, C) with |B|,|C| >= 1.
  std::mt19937 gen(3);
  const auto d = oracle::random_divisor(5, gen);
  const auto up = forget_pullback(d, 6);
  EXPECT_EQ(dot(up, curve(6, {{6}, {1}, {2, 3}, {4, 5}})), 0);
  EXPECT_EQ(dot(up, curve(6, {{6, 1}, {2}, {3}, {4, 5}})), dot(d, curve(5, {{1}, {2}, {3}, {4, 5}})));
}

TEST(ForgetPullback, TwoPoints) {
  // pi_{12}^* of a boundary point of M_{0,4} on labels 3..6.
  const auto d = forget_pullback(DivisorClass(4).add_delta(m({1, 2}), 1), std::vector<int>{1, 2});
  EXPECT_EQ(d, DivisorClass(6)
                   .add_delta(m({3, 4}), 1)
                   .add_delta(m({1, 3, 4}), 1)
                   .add_delta(m({2, 3, 4}), 1)
                   .add_delta(m({5, 6}), 1));
}

TEST(Families, ComponentCountsAndWeights) {
  const auto c5 = family(5, Family::c_ab, {1, 2});
  ASSERT_EQ(c5.components.size(), 3u);
  for (const auto& [f, w] : c5.components) {
    EXPECT_EQ(w, Rational(1));
    EXPECT_EQ(f.blocks[0], m({1}));
    EXPECT_EQ(f.blocks[1], m({2}));
  }
  const std::vector<std::pair<Family, std::size_t>> sizes{{Family::c_ab_1, 4}, {Family::c_ab_2, 3}, {Family::c_ab_3, 4},
                                                          {Family::c_ab_4, 6}};
  for (auto [fam, k] : sizes) {
    const auto c = family(6, fam, {1, 2});
    ASSERT_EQ(c.components.size(), k);
    for (const auto& [f, w] : c.components) EXPECT_EQ(w, rat(1, static_cast<long>(k)));
  }
  for (Family fam : {Family::c_1ab_1, Family::c_1ab_2, Family::c_1ab_3}) {
    const auto c = family(6, fam, {1, 3, 5});
    ASSERT_EQ(c.components.size(), 9u);
    std::set<FCurve> distinct;
    for (const auto& [f, w] : c.components) distinct.insert(f);
    EXPECT_EQ(distinct.size(), 9u);
  }
  EXPECT_THROW(family(6, Family::c_ab, {1, 2}), DomainError);
  EXPECT_THROW(family(6, Family::c_ab_1, {1, 1}), DomainError);
  EXPECT_THROW(family(6, Family::c_small_ab, {2, 3, 3, 2}), DomainError);
  EXPECT_THROW(parse_family("C_xy"), DomainError);
  EXPECT_EQ(parse_family("C_1ab_2"), Family::c_1ab_2);
}

TEST(Families, PsiOnPairFamily) { EXPECT_EQ(dot_cycle(psi_class(6, 1), family(6, Family::c_ab_2, {1, 2})), 1); }

// The seven closed forms, evaluated on more random divisors than Pic has dimensions.
TEST(Families, ClosedFormsOnSixPoints) {
  std::mt19937 gen(2718);
  for (int trial = 0; trial < 26; ++trial) {
    const auto d = oracle::random_divisor(6, gen);
    const oracle::Six s(d);
    for (Mask ab : k_subsets(full_mask(6), 2)) {
      const auto l = labels_of(ab);
      const std::vector<int> p{l[0], l[1]};
      const Rational I = s.I(ab), O = s.O(ab), s12 = s.sigma(ab, 1, 2), s21 = s.sigma(ab, 2, 1);
      ASSERT_EQ(dot_cycle(d, family(6, Family::c_ab_1, p)), I + O / 4 + s12 / 4);
      ASSERT_EQ(dot_cycle(d, family(6, Family::c_ab_2, p)), I - s21 / 3);
      ASSERT_EQ(dot_cycle(d, family(6, Family::c_ab_3, p)), 3 * O / 4 + s12 / 4);
      ASSERT_EQ(dot_cycle(d, family(6, Family::c_ab_4, p)), O / 2 - s12 / 2);
    }
    for (Mask t : k_subsets(full_mask(6), 3)) {
      const auto l = labels_of(t);
      const std::vector<int> p{l[0], l[1], l[2]};
      const Rational I = s.I(t), O = s.O(t), sig = s.sigma(t, 1, 2);
      ASSERT_EQ(dot_cycle(d, family(6, Family::c_1ab_1, p)), (I + O) / 3 - s.bt(t) - sig / 9);
      ASSERT_EQ(dot_cycle(d, family(6, Family::c_1ab_2, p)), I / 3 + 2 * O / 3 + sig / 9);
      ASSERT_EQ(dot_cycle(d, family(6, Family::c_1ab_3, p)), 2 * I / 3 + O / 3 + sig / 9);
    }
  }
}

TEST(Families, SmallCyclePairing) {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 26; ++trial) {
    const auto d = oracle::random_divisor(6, gen);
    const oracle::Six s(d);
    for (Mask ij : k_subsets(m({2, 3, 4, 5, 6}), 2))
      for (Mask ab : k_subsets(m({2, 3, 4, 5, 6}), 2)) {
        if (ij == ab) continue;
        const auto a = labels_of(ij), b = labels_of(ab);
        const auto c = family(6, Family::c_small_ab, {a[0], a[1], b[0], b[1]});
        ASSERT_EQ(dot_cycle(d, c), s.IO() - s.bt(ij | 1) - s.bt(ab | 1));
      }
  }
}

TEST(Fnef, KappaOneOnSixPoints) {
  const auto k = kappa1(6);
  for (const auto& f : fcurves(6)) EXPECT_GE(dot(k, f), 1);
  const auto r = fnef(k);
  EXPECT_TRUE(r.nef);
  EXPECT_EQ(r.checked, 65u);
}

TEST(Fnef, NegatedBoundaryHasWitness) {
  const auto r = fnef(-1 * delta_class(6, m({1, 2})));
  ASSERT_FALSE(r.nef);
  ASSERT_TRUE(r.witness);
  EXPECT_LT(r.value, 0);
  EXPECT_EQ(dot(-1 * delta_class(6, m({1, 2})), *r.witness), r.value);
}

TEST(Fnef, ThirteenPointsOverOrbits) {
  const int n = 13;
  const auto d = canonical_class(n) + rat(1, 3) * (b_class(n, 2) + b_class(n, 5)) + b_class(n, 6);
  const auto r = fnef(d, SymmetryGroup::full(n));
  EXPECT_TRUE(r.nef);
  EXPECT_EQ(r.checked, 18u);
}

TEST(Fnef, GroupRequiresInvariance) {
  EXPECT_THROW(fnef(psi_class(6, 1), SymmetryGroup::full(6)), InvarianceError);
  try {
    fnef(psi_class(6, 1), SymmetryGroup::sym(6, 3));
    FAIL();
  } catch (const InvarianceError& e) {
    EXPECT_EQ(e.element(), "(1 2)");
  }
  EXPECT_TRUE(fnef(kappa1(7), SymmetryGroup::full(7)).nef);
}

TEST(Fnef, GroupAgreesWithFullEnumeration) {
  std::mt19937 gen(8);
  const auto g = SymmetryGroup::sym(7, 4);
  for (int trial = 0; trial < 20; ++trial) {
    DivisorClass d = kappa1(7);
    std::uniform_int_distribution<int> c(-3, 3);
    for (const auto& [b, size] : g.boundary_orbits()) d += rat(c(gen), 4) * orbit_sum(g, b);
    EXPECT_EQ(fnef(d).nef, fnef(d, g).nef);
  }
}
