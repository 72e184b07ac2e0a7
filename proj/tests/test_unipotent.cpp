#include <lie_degrees/maxdegree.hpp>
#include <lie_degrees/unipotent.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace lie_degrees;

namespace {

// Hook formula written out from arm/leg walks, at signed parameter Q.
BigInt hook_formula(const oracle::Parts& p, long Q) {
  const int n = oracle::size_of(p);
  long a = 0;
  for (std::size_t i = 0; i < p.size(); ++i) a += static_cast<long>(i) * p[i];
  BigInt num = 1;
  for (int i = 1; i <= n; ++i) num *= ipow(Q, static_cast<unsigned long>(i)) - 1;
  num *= ipow(Q, static_cast<unsigned long>(a));
  BigInt den = 1;
  for (int h : oracle::hooks_walk(p)) den *= ipow(Q, static_cast<unsigned long>(h)) - 1;
  BigInt d = num / den;
  return d < 0 ? BigInt(-d) : d;
}

std::vector<BigInt> sorted_symbol_degrees(int n, Family f, long q) {
  std::vector<BigInt> out;
  for (const SymbolClass& c : enumerate_symbols(n, f))
    for (int k = 0; k < c.multiplicity(); ++k) out.push_back(degree_symbol(c.symbol, q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> sorted_hook_degrees(int n, long q, bool unitary) {
  std::vector<BigInt> out;
  HookDegreeTable t(n, q, unitary);
  for_each_partition(n, [&](const Partition& p) { out.push_back(t.degree(p)); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(HookDegrees, AValue) {
  EXPECT_EQ(a_value_gl(Partition({5})), 0);
  EXPECT_EQ(a_value_gl(Partition(std::vector<int>(6, 1))), 15);
  EXPECT_EQ(a_value_gl(Partition{2, 2}), 2);
}

TEST(HookDegrees, QuotedCounterexample) {
  EXPECT_EQ(degree_gl(Partition{2, 2, 2}, 2), 5952);
  EXPECT_EQ(degree_gl(Partition{3, 2, 1}, 2), 6480);
}

TEST(HookDegrees, TrivialSteinbergAndTwoTwo) {
  for (long q : {2, 3, 4, 5})
    for (int n = 1; n <= 12; ++n) {
      const Partition st(std::vector<int>(static_cast<std::size_t>(n), 1));
      const BigInt stdeg = ipow(q, static_cast<unsigned long>(n * (n - 1) / 2));
      ASSERT_EQ(degree_gl(st, q), stdeg);
      ASSERT_EQ(degree_gu(st, q), stdeg);
      ASSERT_EQ(degree_gl(Partition({n}), q), 1);
      ASSERT_EQ(degree_gu(Partition({n}), q), 1);
    }
  for (long q = 2; q <= 9; ++q) {
    const BigInt want = BigInt(q) * q * (BigInt(q) * q + 1);
    EXPECT_EQ(degree_gl(Partition{2, 2}, q), want);
    EXPECT_EQ(degree_gu(Partition{2, 2}, q), want);
  }
}

TEST(HookDegrees, MatchWalkedFormula) {
  for (long q : {2, 3, 5})
    for (int n = 1; n <= 10; ++n)
      for (const auto& parts : oracle::all_partitions(n)) {
        ASSERT_EQ(degree_gl(Partition(parts), q), hook_formula(parts, q));
        ASSERT_EQ(degree_gu(Partition(parts), q), hook_formula(parts, -q));
      }
}

TEST(HookDegrees, PrincipalSeriesIdentityGL) {
  // sum_lambda f^lambda deg(lambda) = |GL_n(q) : B|.
  for (long q : {2, 3, 4})
    for (int n = 1; n <= 10; ++n) {
      std::vector<int> degs;
      for (int i = 1; i <= n; ++i) degs.push_back(i);
      BigInt s = 0;
      for (const auto& parts : oracle::all_partitions(n))
        s += oracle::syt_count(parts) * degree_gl(Partition(parts), q);
      ASSERT_EQ(s, oracle::index_of_borel(degs, q)) << n << " " << q;
    }
}

TEST(HookDegrees, RejectsMismatchedTable) {
  HookDegreeTable t(4, 2, false);
  EXPECT_THROW(t.degree(Partition{2, 1}), PreconditionError);
  EXPECT_THROW(HookDegreeTable(3, 1, false), PreconditionError);
}

TEST(Symbols, Validation) {
  EXPECT_THROW(Symbol({2, 1}, {}), PreconditionError);
  EXPECT_THROW(Symbol({-1}, {}), PreconditionError);
  EXPECT_EQ(to_string(Symbol({1, 2}, {0})), "((1,2),(0))");
}

TEST(Symbols, RankAndDefect) {
  for (int n = 1; n <= 8; ++n) {
    Symbol bc(interval(1, n), interval(0, n));
    EXPECT_EQ(symbol_rank(bc), n);
    EXPECT_EQ(symbol_defect(bc), 1);
    Symbol triv({n}, {});
    EXPECT_EQ(symbol_rank(triv), n);
    EXPECT_EQ(symbol_defect(triv), 1);
  }
  Symbol s({1, 2}, {0, 1});
  EXPECT_EQ(symbol_rank(s), 2);
  EXPECT_EQ(symbol_defect(s), 0);
}

TEST(Symbols, EquivalenceInvariants) {
  std::mt19937_64 rng(5);
  for (Family f : {Family::BC, Family::D, Family::D2})
    for (int n = 2; n <= 7; ++n) {
      auto classes = enumerate_symbols(n, f);
      for (int t = 0; t < 20; ++t) {
        const Symbol& s = classes[std::uniform_int_distribution<std::size_t>(0, classes.size() - 1)(rng)].symbol;
        Symbol other = swap_rows(shift(shift(s)));
        ASSERT_EQ(canonicalize(other), canonicalize(s));
        ASSERT_EQ(canonicalize(canonicalize(s)), canonicalize(s));
        ASSERT_EQ(symbol_rank(other), symbol_rank(s));
        ASSERT_EQ(symbol_defect(other), symbol_defect(s));
        ASSERT_EQ(symbol_a_value(other), symbol_a_value(s));
        for (long q : {2, 3}) ASSERT_EQ(degree_symbol(other, q), degree_symbol(s, q));
      }
    }
  EXPECT_EQ(canonicalize(Symbol({3}, {})), canonicalize(Symbol({}, {3})));
}

TEST(Symbols, StatsHooksAndCohooks) {
  SymbolStats st = symbol_stats(Symbol({1, 2}, {0}));
  for (auto [b, c] : st.hooks) EXPECT_LT(b, c);
  for (auto [b, c] : st.cohooks) EXPECT_LE(b, c);
  EXPECT_EQ(st.rank, 2);
  EXPECT_EQ(st.defect, 1);
}

TEST(Symbols, AnchorDegrees) {
  for (long q : {2, 3, 4, 5})
    for (int n = 1; n <= 8; ++n) {
      EXPECT_EQ(degree_symbol(Symbol(interval(1, n), interval(0, n)), q), ipow(q, static_cast<unsigned long>(n * n)));
      EXPECT_EQ(degree_symbol(Symbol({n}, {}), q), 1);
      if (n >= 2) {
        EXPECT_EQ(degree_symbol(Symbol(interval(1, n), interval(0, n - 1)), q),
                  ipow(q, static_cast<unsigned long>(n * (n - 1))));
        EXPECT_EQ(degree_symbol(steinberg_symbol(n, Family::D2), q), ipow(q, static_cast<unsigned long>(n * (n - 1))));
      }
    }
  // Sp_4(3): unipotent degrees 1, 15, 15, 24, 6 (theta_10), 81.
  std::vector<BigInt> want{1, 6, 15, 15, 24, 81};
  EXPECT_EQ(sorted_symbol_degrees(2, Family::BC, 3), want);
}

TEST(Symbols, SteinbergSymbolShapes) {
  EXPECT_EQ(steinberg_symbol(3, Family::BC), Symbol(interval(1, 3), interval(0, 3)));
  EXPECT_EQ(steinberg_symbol(3, Family::D), Symbol(interval(1, 3), interval(0, 2)));
  Symbol two_d = steinberg_symbol(3, Family::D2);
  EXPECT_EQ(symbol_rank(two_d), 3);
  EXPECT_EQ(symbol_family(two_d), Family::D2);
  EXPECT_THROW(steinberg_symbol(1, Family::D), PreconditionError);
  EXPECT_THROW(steinberg_symbol(2, Family::GL), PreconditionError);
}

TEST(Symbols, ClassCounts) {
  EXPECT_EQ(enumerate_symbols(1, Family::BC).size(), 2u);
  EXPECT_EQ(enumerate_symbols(2, Family::BC).size(), 6u);
  // Defect d classes are bipartitions of n - d^2/4; unordered for d = 0.
  for (int n = 2; n <= 9; ++n) {
    BigInt bc = 0;
    for (int d = 1; d * d / 4 <= n; d += 2) bc += oracle::bipartition_count(n - d * d / 4);
    ASSERT_EQ(BigInt(static_cast<long>(enumerate_symbols(n, Family::BC).size())), bc);

    BigInt two_d = 0;
    for (int d = 2; d * d / 4 <= n; d += 4) two_d += oracle::bipartition_count(n - d * d / 4);
    ASSERT_EQ(BigInt(static_cast<long>(enumerate_symbols(n, Family::D2).size())), two_d);

    auto p = oracle::partition_counts(n);
    BigInt d_chars = 0;
    BigInt same = n % 2 ? BigInt(0) : p[static_cast<std::size_t>(n / 2)];
    d_chars += (oracle::bipartition_count(n) - same) / 2 + 2 * same;
    for (int d = 4; d * d / 4 <= n; d += 4) d_chars += oracle::bipartition_count(n - d * d / 4);
    long mult = 0;
    for (const SymbolClass& c : enumerate_symbols(n, Family::D)) mult += c.multiplicity();
    ASSERT_EQ(BigInt(mult), d_chars) << n;
  }
  long d4 = 0;
  for (const SymbolClass& c : enumerate_symbols(4, Family::D)) d4 += c.multiplicity();
  EXPECT_EQ(d4, 14);
}

TEST(Symbols, PrincipalSeriesIdentity) {
  // sum over Irr(W) of phi(1) times the principal series degree = |G:B|.
  for (long q : {2, 3, 4})
    for (int n = 2; n <= 6; ++n) {
      std::vector<int> wb, wd;
      for (int i = 1; i <= n; ++i) wb.push_back(2 * i);
      for (int i = 1; i < n; ++i) wd.push_back(2 * i);
      wd.push_back(n);

      BigInt sb = 0, sd = 0;
      for (int k = 0; k <= n; ++k)
        for (const auto& a : oracle::all_partitions(k))
          for (const auto& b : oracle::all_partitions(n - k)) {
            const int m = static_cast<int>(std::max(a.size(), b.size()));
            const BigInt phi = oracle::hyperoctahedral_degree(a, b);
            sb += phi * degree_symbol(Symbol(oracle::beta_numbers(a, m + 1), oracle::beta_numbers(b, m)), q);
            // W(D_n): {a,b} with a != b restricts irreducibly (counted once
            // over the unordered pair), a = b splits into two halves.
            if (a < b) continue;
            const BigInt dd = degree_symbol(Symbol(oracle::beta_numbers(a, m), oracle::beta_numbers(b, m)), q);
            sd += phi * dd;
          }
      ASSERT_EQ(sb, oracle::index_of_borel(wb, q)) << "B" << n << " q=" << q;
      ASSERT_EQ(sd, oracle::index_of_borel(wd, q)) << "D" << n << " q=" << q;
    }
}

TEST(Symbols, LowRankIsomorphisms) {
  // D_3 = A_3 and 2D_3 = 2A_3: the unipotent degree lists agree.
  for (long q : {2, 3, 4, 5}) {
    EXPECT_EQ(sorted_symbol_degrees(3, Family::D, q), sorted_hook_degrees(4, q, false));
    EXPECT_EQ(sorted_symbol_degrees(3, Family::D2, q), sorted_hook_degrees(4, q, true));
  }
}

TEST(Symbols, SquaresBelowGroupOrder) {
  for (long q : {2, 3})
    for (int n = 2; n <= 8; ++n)
      for (auto [f, g] : {std::pair{Family::BC, GroupFamily::C}, {Family::D, GroupFamily::D}, {Family::D2, GroupFamily::D2}}) {
        BigInt s = 0;
        for (const SymbolClass& c : enumerate_symbols(n, f)) {
          BigInt d = degree_symbol(c.symbol, q);
          s += d * d * c.multiplicity();
        }
        ASSERT_LE(s, group_order(GroupSpec(g, n, q)));
      }
}

TEST(Steinberg, MaximalEverywhere) {
  for (long q : {2, 3, 4, 5}) {
    for (int n = 1; n <= 30; ++n) {
      ASSERT_TRUE(verify_steinberg_max(n, q, Family::GL).ok) << n << " " << q;
      ASSERT_TRUE(verify_steinberg_max(n, q, Family::GU).ok) << n << " " << q;
    }
    for (int n = 1; n <= 10; ++n)
      for (Family f : {Family::BC, Family::D, Family::D2}) {
        if (f != Family::BC && n < 2) continue;
        SteinbergVerdict v = verify_steinberg_max(n, q, f);
        ASSERT_TRUE(v.ok) << to_string(f) << n << " q=" << q << " " << v.runner_up;
        ASSERT_TRUE(v.ok_halved);
        ASSERT_LT(v.gap, 1);
      }
  }
}

TEST(Chain, CuspidalFirstStep) {
  Symbol cusp(interval(0, 3), {});
  auto chain = stclass_chain(cusp, 2);
  ASSERT_GE(chain.size(), 2u);
  EXPECT_EQ(chain[1], canonicalize(Symbol(interval(0, 2), {3})));
}

TEST(Chain, FromTrivialCharacter) {
  for (long q : {2, 3})
    for (int n = 1; n <= 8; ++n) {
      auto chain = stclass_chain(Symbol({n}, {}), q);
      ASSERT_TRUE(is_steinberg(chain.back()));
      for (std::size_t i = 1; i < chain.size(); ++i)
        ASSERT_GT(degree_symbol(chain[i], q), degree_symbol(chain[i - 1], q));
    }
}

TEST(Comparisons, FirstColumn) {
  for (long q : {2, 3, 4, 5})
    for (int n = 2; n <= 20; ++n) {
      CheckRecord r = verify_first_column_comparison(n, q);
      ASSERT_TRUE(r.pass) << n << " " << q << " " << r.witness;
    }
}

TEST(Comparisons, DominanceOverSmallFields) {
  for (long q : {3, 4, 5})
    for (int n = 1; n <= 14; ++n) ASSERT_TRUE(dominance_counterexamples(n, q).empty()) << n << " " << q;
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(dominance_counterexamples(n, 2).empty());
  auto bad = dominance_counterexamples(6, 2);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].first, (Partition{2, 2, 2}));
  EXPECT_EQ(bad[0].second, (Partition{3, 2, 1}));
}

TEST(Comparisons, DominanceAgainstPartialSums) {
  // Same search with dominance read from the partial-sum oracle.
  for (long q : {2, 3})
    for (int n = 2; n <= 9; ++n) {
      auto parts = oracle::all_partitions(n);
      std::vector<std::pair<Partition, Partition>> want;
      for (const auto& mu : parts)
        for (const auto& nu : parts)
          if (mu != nu && oracle::dominated(mu, nu) &&
              hook_formula(nu, q) >= hook_formula(mu, q))
            want.emplace_back(Partition(mu), Partition(nu));
      auto got = dominance_counterexamples(n, q);
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, want);
    }
}

TEST(Comparisons, GLAtLeastGU) {
  for (long q : {2, 3, 4, 5})
    for (int n = 1; n <= 25; ++n) {
      GlGuComparison c = compare_gl_gu(n, q);
      ASSERT_TRUE(c.ok) << n << " " << q << " " << c.witness;
      // Trivial and Steinberg always tie; (2,2) ties as well.
      ASSERT_GE(c.equal.size(), n == 1 ? 1u : 2u);
      if (n == 4) { EXPECT_NE(std::find(c.equal.begin(), c.equal.end(), Partition{2, 2}), c.equal.end()); }
    }
}
