#include <gtest/gtest.h>

#include <random>

#include "m0n/chambers6/fibration.hpp"
#include "oracles/fnef_cone.hpp"
#include "oracles/six_point.hpp"

using namespace m0n;

namespace {

Mask m(std::initializer_list<int> labels) { return mask_of(std::vector<int>(labels)); }

const DivisorClass& ray_in(Mask triple) {
  for (const auto& r : oracle::fnef_rays_six())
    if (chamber(r).triple == triple) return r;
  throw std::runtime_error("no ray in chamber " + subset_string(triple));
}

/// Nonnegative combination of a few extreme rays.
DivisorClass random_fnef(std::mt19937& gen, int count) {
  const auto& rays = oracle::fnef_rays_six();
  DivisorClass d(6);
  for (int k = 0; k < count; ++k) d += rat(1 + gen() % 5, 1 + gen() % 3) * rays[gen() % rays.size()];
  return d;
}

DivisorClass pair_pair(const Rational& alpha, const Rational& beta) {
  const DivisorClass s = DivisorClass(4).add_delta(m({1, 2}), 1).add_delta(m({2, 3}), 1).add_delta(m({1, 3}), 1);
  return alpha * forget_pullback(s, std::vector<int>{4, 5}) + beta * forget_pullback(s, std::vector<int>{2, 3});
}

}  // namespace

TEST(Zeta, KappaOneIsInterior) {
  const auto z = zeta(kappa1(6));
  for (const auto& [s, v] : z.pair) EXPECT_GT(v, 0);
  for (const auto& [s, v] : z.triple) EXPECT_GT(v, 0);
}

TEST(Zeta, PullbackAlongFirstProjection) {
  const auto d = forget_pullback(DivisorClass(5).add_delta(m({1, 2}), 1), 1);
  const auto z = zeta(d);
  for (int j = 2; j <= 6; ++j) EXPECT_EQ(z.pair.at(m({1, j})), 0) << j;
}

TEST(Zeta, ZeroDivisor) {
  const auto z = zeta(DivisorClass(6));
  EXPECT_EQ(z.pair.size(), 15u);
  EXPECT_EQ(z.triple.size(), 10u);
  EXPECT_EQ(z.vanishing().size(), 25u);
  EXPECT_THROW(zeta(DivisorClass(5)), DomainError);
}

TEST(Zeta, FormulaMatchesCurveFormOnRandomDivisors) {
  std::mt19937 gen(4);
  for (int trial = 0; trial < 26; ++trial) {
    const auto d = oracle::random_divisor(6, gen);
    const auto z = zeta(d);  // throws if the two computations disagree
    const oracle::Six s(d);
    for (Mask ab : six_pairs())
      EXPECT_EQ(z.pair.at(ab), 2 * s.I(ab) + s.O(ab) / 3 + s.sigma(ab, 1, 2) / 3 - rat(2, 9) * s.sigma(ab, 2, 1));
  }
}

TEST(Present, FivePointPsi) {
  const auto p = present(psi_class(5, 1));
  for (Mask ab : k_subsets(full_mask(5), 2))
    EXPECT_EQ(p.coefficient(BoundaryClass(5, ab)), has_label(ab, 1) ? rat(1, 2) : rat(1, 6)) << subset_string(ab);
}

TEST(Present, RelationsGiveZero) {
  for (const auto& r : keel_relations(6)) EXPECT_TRUE(present(r).coeffs.empty());
}

TEST(Present, KappaOneFullSupport) {
  const auto p = present(kappa1(6));
  EXPECT_EQ(p.coeffs.size(), 25u);
  EXPECT_TRUE(p.nonnegative());
}

TEST(Present, ReproducesRandomDivisors) {
  std::mt19937 gen(100);
  for (int n : {5, 6})
    for (int trial = 0; trial < 100; ++trial) {
      const auto d = oracle::random_divisor(n, gen);
      EXPECT_TRUE(pic_context(n).equivalent(present(d).divisor(), d));
    }
  EXPECT_THROW(present(DivisorClass(7)), DomainError);
}

TEST(Decompose, KappaOneUsesPresentation) {
  const auto d = kappa1(6);
  const auto r = decompose_effective(d);
  EXPECT_FALSE(r.negative_triple);
  EXPECT_EQ(r.decomposition.combination.coeffs, present(d).coeffs);
}

TEST(Decompose, RejectsNonNef) {
  EXPECT_THROW(decompose_effective(-1 * kappa1(6)), PreconditionError);
}

TEST(Decompose, NegativeTripleBranch) {
  const Mask t = m({1, 2, 3});
  const auto d = ray_in(t) + rat(1, 100) * kappa1(6);
  const auto z = zeta(d);
  ASSERT_LT(z.triple.at(t), 0);
  const auto r = decompose_effective(d);
  ASSERT_TRUE(r.negative_triple);
  EXPECT_EQ(*r.negative_triple, t);
  EXPECT_GT(r.rho, 0);
  EXPECT_GE(z.triple.at(t), -r.rho / 6);
  EXPECT_EQ(r.b_part.coeffs.size(), 24u);
  EXPECT_FALSE(check_decomposition(pic_context(6), r.decomposition));
}

TEST(Decompose, InvariantsOnSampledNefDivisors) {
  std::mt19937 gen(9);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = random_fnef(gen, 1 + trial % 3);
    const auto z = zeta(d);
    for (const auto& [s, v] : z.pair) ASSERT_GE(v, 0);
    const auto neg = z.negative_triples();
    ASSERT_LE(neg.size(), 1u);
    const Rational rho = SixCoords(d).rho();
    if (!neg.empty()) {
      EXPECT_GT(rho, 0);
      EXPECT_GE(z.triple.at(neg[0]), -rho / 6);
    }
    EXPECT_FALSE(check_decomposition(pic_context(6), decompose_effective(d).decomposition));
  }
}

TEST(Decompose, EquationsTwoNinthsAndOneNinth) {
  std::mt19937 gen(29);
  for (int trial = 0; trial < 26; ++trial) {
    const auto d = oracle::random_divisor(6, gen);
    const auto z = zeta(d);
    const SixCoords x(d);
    const Rational rho = x.rho();
    for (Mask t : six_triples()) {
      const Rational zt = z.triple.at(t);
      const auto tl = labels_of(t & ~1u);
      const Rational c1t = dot_cycle(d, family(6, Family::c_1ab_1, labels_of(t)));
      for (Mask ab : six_pairs()) {
        if (popcount(ab & t) != 1) continue;
        const auto l = labels_of(ab);
        const Rational c1 = dot_cycle(d, family(6, Family::c_ab_1, {l[0], l[1]}));
        ASSERT_EQ(z.pair.at(ab) + rat(2, 9) * zt, rat(5, 9) * c1t + rat(20, 9) * c1 + rat(5, 27) * rho);
      }
      for (Mask s : six_triples()) {
        if (s == t) continue;
        const auto l = labels_of(s & ~1u);
        const Rational lhs = zt / 9 + z.triple.at(s);
        ASSERT_EQ(lhs, (2 * rho - 8 * zt) / 9 + rat(20, 9) * (x.IO() - x.b(t) - x.b(s)));
        ASSERT_EQ(dot_cycle(d, family(6, Family::c_small_ab, {tl[0], tl[1], l[0], l[1]})), x.IO() - x.b(t) - x.b(s));
      }
    }
  }
}

TEST(Decompose, VanishingPatternsOnRays) {
  // Two vanishing disjoint pair coefficients force the third to be positive;
  // four vanishing coefficients through i force the fifth.
  std::mt19937 gen(77);
  std::vector<DivisorClass> samples = oracle::fnef_rays_six();
  for (int k = 0; k < 40; ++k) samples.push_back(random_fnef(gen, 2));
  for (const auto& d : samples) {
    const auto z = zeta(d);
    for (Mask ij : six_pairs())
      for (Mask ab : six_pairs()) {
        if (ij & ab) continue;
        const Mask mn = full_mask(6) & ~(ij | ab);
        if (sgn(z.pair.at(ij)) == 0 && sgn(z.pair.at(ab)) == 0) {
          ASSERT_GT(z.pair.at(mn), 0);
        }
      }
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j) {
        if (i == j) continue;
        bool others = true;
        for (int a = 1; a <= 6; ++a)
          if (a != i && a != j && sgn(z.pair.at(label_bit(i) | label_bit(a))) != 0) others = false;
        if (others) {
          ASSERT_EQ(z.pair.at(label_bit(i) | label_bit(j)), 0);
        }
      }
  }
}

TEST(Chamber, Labels) {
  const auto k = chamber(kappa1(6));
  EXPECT_EQ(k.label(), "central");
  EXPECT_TRUE(k.vanishing.empty());
  EXPECT_FALSE(k.on_face());
  const auto zero = chamber(DivisorClass(6));
  EXPECT_EQ(zero.vanishing.size(), 25u);
  EXPECT_TRUE(zero.on_face());
  const auto face = chamber(pair_pair(1, 1));
  EXPECT_TRUE(face.on_face());
  EXPECT_EQ(face.closure_triples, (std::vector<Mask>{m({1, 2, 3}), m({1, 4, 5})}));
}

TEST(BigWitness, Examples) {
  auto k = big_witness(present(kappa1(6)));
  ASSERT_TRUE(k);
  EXPECT_EQ(k->kind, BigKind::ample_plus_effective);
  EXPECT_GT(k->t, 0);
  EXPECT_TRUE(k->remainder.nonnegative());

  BoundaryCombination p1{6, {}};
  for (Mask s : {m({5, 6}), m({1, 4}), m({2, 4}), m({3, 4}), m({1, 5, 6}), m({2, 5, 6}), m({3, 5, 6})})
    p1.add(BoundaryClass(6, s), 1);
  auto w = big_witness(p1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, BigKind::pattern1);
  EXPECT_EQ(w->labeling, (std::array<int, 6>{1, 2, 3, 4, 5, 6}));

  BoundaryCombination single{6, {}};
  single.add(BoundaryClass(6, m({1, 2})), 1);
  EXPECT_FALSE(big_witness(single));
}

TEST(Fibration, FivePoints) {
  const auto up = forget_pullback(DivisorClass(4).add_delta(m({1, 2}), 1).add_delta(m({1, 3}), 1).add_delta(m({1, 4}), 1), 1);
  const auto r = classify_fibration(up);
  EXPECT_EQ(r.tag, FibrationTag::forget_one);
  EXPECT_EQ(r.points, std::vector<int>{1});
  EXPECT_EQ(classify_fibration(kappa1(5)).tag, FibrationTag::big);
  EXPECT_EQ(classify_fibration(DivisorClass(5)).tag, FibrationTag::trivial);
  // Case 2: positive combination of pullbacks along pi_1 and pi_2.
  const auto d1 = forget_pullback(DivisorClass(4).add_delta(m({1, 2}), 1), 2);
  const auto d2 = forget_pullback(DivisorClass(4).add_delta(m({1, 2}), 1), 1);
  const auto b = classify_fibration(2 * d1 + 3 * d2);
  EXPECT_EQ(b.tag, FibrationTag::big);
  ASSERT_TRUE(b.product);
  EXPECT_GT(b.product->x, 0);
  EXPECT_GT(b.product->y, 0);
}

TEST(Fibration, SixPointForgetOne) {
  for (int i = 1; i <= 6; ++i) {
    const auto d = forget_pullback(kappa1(5), i);
    const auto r = classify_fibration(d);
    EXPECT_EQ(r.tag, FibrationTag::forget_one) << i;
    EXPECT_EQ(r.points, std::vector<int>{i});
    ASSERT_TRUE(r.image_presentation);
    EXPECT_TRUE(r.image_presentation->nonnegative());
  }
  // Descent along pi_1 is the two-thirds formula over pairs.
  const auto d = forget_pullback(kappa1(5), 1);
  const SixCoords x(d);
  DivisorClass e(5);
  for (Mask jk : k_subsets(m({2, 3, 4, 5, 6}), 2)) e.add_delta(jk >> 1, rat(2, 3) * x.I(jk));
  EXPECT_TRUE(pic_context(5).equivalent(*classify_fibration(d).image, e));
}

TEST(Fibration, SixPointForgetTwo) {
  const auto d = forget_pullback(DivisorClass(4).add_delta(m({1, 2}), 1), std::vector<int>{2, 5});
  const auto r = classify_fibration(d);
  EXPECT_EQ(r.tag, FibrationTag::forget_two);
  EXPECT_EQ(r.points, (std::vector<int>{2, 5}));
}

TEST(Fibration, PairPair) {
  const Rational alpha = rat(3, 2), beta = rat(1, 3);
  const auto d = pair_pair(alpha, beta);
  const auto r = classify_fibration(d);
  ASSERT_EQ(r.tag, FibrationTag::forget_pair_pair);
  EXPECT_EQ(r.pairs, (std::vector<Mask>{m({4, 5}), m({2, 3})}));
  EXPECT_EQ(r.weights, (std::vector<Rational>{alpha, beta}));
  const SixCoords x(d);
  EXPECT_EQ(alpha, rat(2, 3) * (x.c(1) + x.c(2)));
  EXPECT_EQ(beta, rat(2, 3) * (x.c(1) - x.c(2)));
}

TEST(Fibration, KappaOneIsBig) {
  const auto r = classify_fibration(kappa1(6));
  EXPECT_EQ(r.tag, FibrationTag::big);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->kind, BigKind::ample_plus_effective);
}
