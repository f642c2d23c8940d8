#include <gtest/gtest.h>

#include <cmath>

#include "ddseq/analytics.hpp"
#include "ddseq/scan.hpp"
#include "oracles.hpp"

using namespace ddseq;

TEST(Mahler, LinearAndJensenCases) {
  EXPECT_NEAR(mahler(LaurentPoly::parse("X1 - 2")).value, 2.0, 1e-6);
  EXPECT_NEAR(mahler(LaurentPoly::parse("X1 - X2 - 4")).value, 4.0, 1e-6);
  EXPECT_NEAR(mahler(LaurentPoly::parse("3*X1^2 - 1")).value, 3.0, 1e-6);
}

TEST(Mahler, OnePlusXPlusY) {
  // Smyth's value exp(3 sqrt(3) / (4 pi) L(chi_-3, 2)).
  const double smyth = 1.3813564445184977;
  auto e = mahler(LaurentPoly::parse("1 + X1 + X2"), 2);
  EXPECT_NEAR(e.value, smyth, 2e-3);
}

TEST(Mahler, QuadratureMatchesRootFormulaInOneVariable) {
  for (const char* s : {"X1 - 2", "2*X1^2 + X1 + 3", "X1^3 - X1 - 1", "5*X1 + 1", "X1^2 + 1"}) {
    auto e = mahler(LaurentPoly::parse(s));
    ASSERT_TRUE(e.root_formula.has_value());
    EXPECT_NEAR(e.value, *e.root_formula, 1e-3) << s;
  }
}

TEST(Mahler, ErrorIndicatorShrinksWithRefinement) {
  auto f = LaurentPoly::parse("1 + X1 + X2");
  double prev = mahler(f, 0).error_indicator;
  for (int level = 1; level <= 2; ++level) {
    const double cur = mahler(f, level).error_indicator;
    EXPECT_LE(cur, prev);
    prev = cur;
  }
}

TEST(Mahler, MonteCarloForFourVariables) {
  auto e = mahler(LaurentPoly::parse("X1 + X2 + X3 + X4 + 10"));
  EXPECT_NEAR(e.value, 10.0, 0.05);
  EXPECT_EQ(e.nodes, 1u << 14);
}

TEST(Mahler, SubgroupMeasures) {
  auto f = LaurentPoly::parse("X1 - X2 - 4");
  EXPECT_NEAR(mahler_on_subgroup(f, {{1}, {1}}).value, 4.0, 1e-9);
  EXPECT_NEAR(mahler_on_subgroup(f, {{1, 0}, {0, 1}}).value, mahler(f).value, 1e-12);
  EXPECT_NEAR(mahler_on_subgroup(LaurentPoly::parse("X1 + X2"), {{1}, {-1}}).value, 1.0, 1e-3);
  EXPECT_THROW(mahler(LaurentPoly(1)), DomainError);
}

TEST(Growth, ApproachesMahlerMeasure) {
  auto t = growth_experiment(LaurentPoly::parse("X1 - 2"), {30});
  EXPECT_NEAR(t.rows[0].root, 2.0, 0.02);
  auto u = growth_experiment(LaurentPoly::parse("X1 - X2 - 4"), {24});
  EXPECT_NEAR(u.rows[0].root, 4.0, 0.2);
  EXPECT_NEAR(std::exp(u.reference_log_mahler), 4.0, 1e-6);
}

TEST(Growth, NonAtoralExampleIsReportOnly) {
  auto t = growth_experiment(LaurentPoly::parse("X1 + X2 + X1^-1 + X2^-1 - 3"), {1, 2, 3, 4});
  EXPECT_EQ(t.rows.size(), 4u);
}

TEST(RaScan, TwoXMinusOneMatchesMultiplicativeOrder) {
  auto f = LaurentPoly::parse("2*X1 - 1");
  for (std::int64_t p = 3; p <= 50; ++p) {
    if (!oracle::is_prime(p)) continue;
    auto recs = ra_scan(f, static_cast<std::uint64_t>(p), 50);
    ASSERT_EQ(recs.size(), 1u) << p;
    EXPECT_EQ(static_cast<std::int64_t>(recs[0].order), oracle::mult_order(2, p));
  }
  EXPECT_TRUE(ra_scan(f, 2, 20).empty());
  auto seven = ra_scan(f, 7, 20);
  ASSERT_EQ(seven.size(), 1u);
  EXPECT_EQ(seven[0].group, FiniteSubgroup::full(1, 3));
}

TEST(RaScan, RecordsAreCyclicAndMinimal) {
  auto f = LaurentPoly::parse("X1 - X2 - 4");
  RaOptions all;
  all.include_noncyclic = true;
  for (std::uint64_t p : {3, 5, 7, 13}) {
    auto recs = ra_scan(f, p, 12, all);
    for (const auto& r : recs) {
      EXPECT_TRUE(r.group.is_cyclic());
      EXPECT_EQ(mpz_fdiv_ui(V(f, r.group).get_mpz_t(), p), 0u);
      for (const auto& m : maximal_subgroups(r.group)) EXPECT_NE(mpz_fdiv_ui(W(f, m).get_mpz_t(), p), 0u);
    }
    RaOptions slow;
    slow.fast_path = false;
    auto exact = ra_scan(f, p, 12, slow);
    auto fast = ra_scan(f, p, 12);
    ASSERT_EQ(exact.size(), fast.size());
    for (std::size_t i = 0; i < exact.size(); ++i) EXPECT_EQ(exact[i].group, fast[i].group);
  }
  EXPECT_THROW(ra_scan(f, 4, 5), DomainError);
}

TEST(Zsig, TwoXMinusOne) {
  auto recs = zsig_scan(LaurentPoly::parse("2*X1 - 1"), 12);
  ASSERT_EQ(recs.size(), 12u);
  for (const auto& r : recs) {
    const auto n = static_cast<std::int64_t>(r.group.order());
    // Brute force: primes of 2^n - 1 not dividing 2^d - 1 for d < n.
    Int rest = abs(r.w);
    for (std::int64_t q = 2; q <= 5000; ++q) {
      if (!oracle::is_prime(q) || mpz_fdiv_ui(rest.get_mpz_t(), q) != 0) continue;
      const bool primitive = oracle::mult_order(2, q) == n;
      EXPECT_EQ(mpz_fdiv_ui(r.primitive_part.value().get_mpz_t(), q) == 0, primitive) << "n=" << n << " q=" << q;
    }
    EXPECT_EQ(r.in_zsigmondy_set, n == 1 || n == 6) << n;
  }
}

TEST(Zsig, PrimitivePartAgreesWithRanksOfApparition) {
  auto f = LaurentPoly::parse("2*X1 - 1");
  for (const auto& r : zsig_scan(f, 10))
    for (const auto& [q, e] : r.primitive_part.factors) {
      auto recs = ra_scan(f, q.get_ui(), static_cast<std::int64_t>(r.group.order()));
      ASSERT_FALSE(recs.empty());
      EXPECT_EQ(recs.back().group, r.group);
    }
}

TEST(Romanoff, AuditInequalities) {
  auto f = LaurentPoly::parse("X1 - X2 - 4");
  auto r = romanoff_audit(f, 4, 1.0, 50);
  EXPECT_EQ(r.l1_norm, Int(6));
  EXPECT_NEAR(r.sup_log_bound, std::log(6.0), 1e-12);
  EXPECT_TRUE(r.inequality_holds);
  EXPECT_LE(r.log_abs_A, r.log_rhs);
  // sum_{n <= 4} n nu_2(n) = 1 + 2*3 + 3*4 + 4*7
  EXPECT_EQ(r.weight, Int(47));
  EXPECT_DOUBLE_EQ(r.main_term, 3.0);
  EXPECT_GE(r.d_with_multiplicity, r.d_distinct_primes);
}

TEST(Density, TwoXMinusOne) {
  auto f = LaurentPoly::parse("2*X1 - 1");
  auto d = density_report(f, 1.0, 50, 50);
  std::vector<std::uint64_t> odd;
  for (std::uint64_t p = 3; p <= 50; ++p)
    if (oracle::is_prime(static_cast<std::int64_t>(p))) odd.push_back(p);
  EXPECT_EQ(d.primes, odd);
  auto small = density_report(f, 0.0, 50, 50);
  EXPECT_TRUE(small.primes.empty());  // f(1) = 1
  EXPECT_LE(density_report(f, 0.5, 30, 30).reciprocal_sum, density_report(f, 0.5, 50, 50).reciprocal_sum);
}
