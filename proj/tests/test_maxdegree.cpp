#include <lie_degrees/maxdegree.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace lie_degrees;

TEST(Groups, SpecValidation) {
  EXPECT_THROW(GroupSpec(GroupFamily::D, 1, 2), PreconditionError);
  EXPECT_THROW(GroupSpec(GroupFamily::A, 3, 1), PreconditionError);
  EXPECT_EQ(to_string(GroupSpec(GroupFamily::A, 15, 3)), "A(n=15,q=3)");
  EXPECT_EQ(parse_group_family("2A"), GroupFamily::A2);
  EXPECT_THROW(parse_group_family("E8"), PreconditionError);
}

TEST(Groups, OrderParts) {
  OrderParts a = order_parts(GroupSpec(GroupFamily::A, 3, 2));
  EXPECT_EQ(a.p_part, 8);
  EXPECT_EQ(a.pprime_part, 21);
  OrderParts c = order_parts(GroupSpec(GroupFamily::C, 2, 3));
  EXPECT_EQ(c.p_part, 81);
  EXPECT_EQ(c.pprime_part, 640);
  OrderParts d = order_parts(GroupSpec(GroupFamily::D, 2, 2));
  EXPECT_EQ(d.p_part, 4);
  EXPECT_EQ(d.pprime_part, 9);
  EXPECT_EQ(group_order(GroupSpec(GroupFamily::A, 2, 5)), 120);  // SL_2(5)
  EXPECT_EQ(group_order(GroupSpec(GroupFamily::A2, 3, 2)), 216);  // SU_3(2)
}

TEST(Polynomials, Examples) {
  EXPECT_EQ(count_irred(2, 1), 2);
  EXPECT_EQ(count_irred(2, 3), 2);
  EXPECT_EQ(count_irred(3, 2), 3);
  EXPECT_EQ(count_irred_nondual(2, 1), 0);
  EXPECT_EQ(count_irred_nondual(3, 1), 0);
  EXPECT_EQ(count_irred_nondual(5, 1), 2);
  BigInt n5 = count_irred_nondual(2, 5);
  EXPECT_LE(3 * 32, 4 * 5 * n5);
  EXPECT_LT(n5 * 5, 32);
  EXPECT_THROW(count_irred(6, 2), PreconditionError);
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(12), 0);
}

TEST(Polynomials, MatchFrobeniusOrbits) {
  // All prime powers q <= 1024 and d with q^d <= 2^20.
  for (long q = 2; q <= 1024; ++q) {
    if (!oracle::is_prime_power(q)) continue;
    ASSERT_EQ(is_prime_power(q), true);
    for (int d = 1; oracle::ipow(q, d) <= (1L << 20); ++d) {
      oracle::OrbitCounts o = oracle::orbit_counts(q, d);
      BigInt irr = d == 1 ? BigInt(q - 1) : count_irred(q, d);
      ASSERT_EQ(irr, o.irreducible) << q << "^" << d;
      ASSERT_EQ(count_self_dual(q, d), o.self_dual) << q << "^" << d;
      ASSERT_EQ(count_irred_nondual(q, d), o.irreducible - o.self_dual) << q << "^" << d;
    }
  }
  for (long q = 2; q <= 1024; ++q) ASSERT_EQ(is_prime_power(q), oracle::is_prime_power(q)) << q;
}

TEST(Polynomials, Brackets) {
  for (long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32})
    for (long d = 1; d <= 24; ++d) {
      if (d >= 3) { ASSERT_TRUE(poly_bracket_holds(q, d)) << q << " " << d; }
      ASSERT_TRUE(poly2_upper_holds(q, d)) << q << " " << d;
      if (poly2_lower_applies(q, d)) { ASSERT_TRUE(poly2_lower_holds(q, d)) << q << " " << d; }
    }
}

TEST(BGL, SmallValues) {
  for (long q : {2, 3, 4, 5, 7}) EXPECT_EQ(b_gl_exact(1, q).b, 1);
  EXPECT_EQ(b_gl_exact(2, 2).b, 2);
  EXPECT_EQ(b_gl_exact(2, 3).b, 4);
  EXPECT_EQ(b_gl_exact(3, 2).b, 8);
  BGLResult r = b_gl_exact(3, 3);
  EXPECT_EQ(r.b, 39);
  EXPECT_EQ(to_string(r.witness), "GL_2(q^1) x GL_1(q^1)");
  EXPECT_THROW(b_gl_exact(3, 6), PreconditionError);
}

TEST(BGL, MatchesBruteForceOverTypes) {
  for (long q : {2, 3, 4, 5})
    for (int n = 1; n <= (q == 2 ? 12 : 9); ++n) {
      BGLResult r = b_gl_exact(n, q);
      ASSERT_EQ(r.b, oracle::b_gl_brute(n, q)) << n << " " << q;
      // The witness is the first maximiser among all admissible types.
      std::optional<CentralizerTypeGL> first;
      for (const CentralizerTypeGL& t : enumerate_centralizer_types(n, q)) {
        ASSERT_TRUE(t.within_budget(q));
        ASSERT_EQ(t.size(), n);
        if (type_degree(t, q) == r.b && (!first || type_less(t, *first))) first = t;
      }
      ASSERT_TRUE(first.has_value());
      ASSERT_EQ(to_string(*first), to_string(r.witness)) << n << " " << q;
    }
}

TEST(BGL, WitnessOverTwoHasOneLinearFactor) {
  for (const BGLResult& r : b_gl_table(40, 2)) ASSERT_LE(r.witness.multiplicity(1), 1) << r.n;
}

TEST(BGL, BracketsAndSeitzBound) {
  for (long q : {2, 3, 4, 5, 7, 8, 9}) {
    auto table = b_gl_table(40, q);
    for (const BGLResult& r : table) {
      GroupSpec g(GroupFamily::A, r.n, q);
      const BigInt st = ipow(q, static_cast<unsigned long>(r.n * (r.n - 1) / 2));
      ASSERT_GE(r.b, st);
      ASSERT_LE(r.b, seitz_bound(g)) << r.n << " " << q;
      Rational c(r.b, st);
      c.canonicalize();
      ASSERT_EQ(r.c, c);
      ASSERT_TRUE(bound_bracket(g).certifies(r.c)) << r.n << " " << q;
    }
  }
}

TEST(Seitz, Examples) {
  EXPECT_EQ(seitz_bound(GroupSpec(GroupFamily::C, 2, 3)), 160);
  EXPECT_GE(seitz_bound(GroupSpec(GroupFamily::A, 2, 3)), 4);
  EXPECT_GE(seitz_bound(GroupSpec(GroupFamily::A, 2, 2)), 2);
}

TEST(Brackets, Enclosures) {
  // A, n=10, q=2: upper = 13 log_2(12)^2.54 = 13 * 3.5849625...^2.54.
  BoundBracket a = bound_bracket(GroupSpec(GroupFamily::A, 10, 2));
  EXPECT_GE(a.lower.lo, 1);
  EXPECT_LT(a.upper.width(), Rational(1, ipow(10, 30)));
  EXPECT_GT(a.upper.lo, Rational(3325, 10));
  EXPECT_LT(a.upper.hi, Rational(3335, 10));
  // C, n=5, q=2: upper = 8 (1 + log_2 11)^1.27, lower = max(1, ...) = 1.
  BoundBracket c = bound_bracket(GroupSpec(GroupFamily::C, 5, 2));
  EXPECT_EQ(c.lower.lo, 1);
  EXPECT_EQ(c.lower.hi, 1);
  EXPECT_GT(c.upper.lo, Rational(5341, 100));
  EXPECT_LT(c.upper.hi, Rational(5342, 100));
}

TEST(Epsilon, FrontierRows) {
  struct Row {
    GroupFamily f;
    int n;
    long q;
    EpsilonVerdict v;
  };
  using enum EpsilonVerdict;
  const Row rows[] = {
      {GroupFamily::A, 15, 3, CertifiedGtOne}, {GroupFamily::A, 14, 3, ListedException},
      {GroupFamily::A, 5, 3, ListedException}, {GroupFamily::A, 5, 4, CertifiedGtOne},
      {GroupFamily::A, 4, 5, CertifiedGtOne},  {GroupFamily::A, 30, 2, ListedException},
      {GroupFamily::A2, 6, 3, CertifiedGtOne}, {GroupFamily::A2, 15, 2, CertifiedGtOne},
      {GroupFamily::A2, 14, 2, ListedException}, {GroupFamily::C, 18, 3, CertifiedGtOne},
      {GroupFamily::C, 17, 3, ListedException}, {GroupFamily::B, 4, 4, CertifiedGtOne},
      {GroupFamily::D, 31, 3, CertifiedGtOne}, {GroupFamily::D, 30, 3, ListedException},
      {GroupFamily::D, 7, 5, CertifiedGtOne},  {GroupFamily::D, 6, 5, ListedException},
      {GroupFamily::D, 4, 7, ListedException}, {GroupFamily::D2, 31, 3, CertifiedGtOne},
  };
  for (const Row& r : rows)
    EXPECT_EQ(epsilon_certificate(GroupSpec(r.f, r.n, r.q)).verdict, r.v) << to_string(GroupSpec(r.f, r.n, r.q));
}

TEST(Epsilon, CertificatesBeyondFrontiersStayCertified) {
  for (int n = 15; n <= 60; ++n) ASSERT_EQ(epsilon_certificate(GroupSpec(GroupFamily::A, n, 3)).verdict, EpsilonVerdict::CertifiedGtOne);
  for (long q : {4, 5, 7, 8, 9, 11, 16, 27, 32})
    for (int n = q == 4 ? 5 : 4; n <= 30; ++n)
      ASSERT_EQ(epsilon_certificate(GroupSpec(GroupFamily::A, n, q)).verdict, EpsilonVerdict::CertifiedGtOne);
  for (int n = 18; n <= 60; ++n)
    ASSERT_EQ(epsilon_certificate(GroupSpec(GroupFamily::C, n, 3)).verdict, EpsilonVerdict::CertifiedGtOne);
}

TEST(MergeRatio, Examples) {
  CentralizerTypeGL t{{{1, 2}, {1, 1}}};
  EXPECT_EQ(merge_ratio_sl_n_2(t).ratio, Rational(3, 7));
  CentralizerTypeGL u{{{2, 2}, {1, 1}}};
  EXPECT_TRUE(merge_ratio_in_range(merge_ratio_sl_n_2(u).ratio));
  CentralizerTypeGL lin{{{1, 1}, {1, 1}}};
  EXPECT_THROW(merge_ratio_sl_n_2(lin), PreconditionError);
  EXPECT_THROW(merge_ratio_sl_n_2(CentralizerTypeGL{{{3, 1}}}), PreconditionError);
}

TEST(MergeRatio, SweepOverTwo) {
  long tested = 0;
  for (int n = 2; n <= 12; ++n)
    for (const CentralizerTypeGL& t : enumerate_centralizer_types(n, 2)) {
      if (t.factors.size() < 2) continue;
      MergeRatio m = merge_ratio_sl_n_2(t);
      ASSERT_TRUE(merge_ratio_in_range(m.ratio)) << to_string(t);
      ++tested;
    }
  EXPECT_GT(tested, 100);
}
