#include <gtest/gtest.h>

#include <random>

#include "ddseq/ddcore.hpp"
#include "oracles.hpp"

using namespace ddseq;

namespace {

struct Sample {
  LaurentPoly f;
  std::vector<oracle::Term> terms;
  std::int64_t m;
  std::vector<ExpVec> gens;
  FiniteSubgroup group;
};

Sample random_sample(std::mt19937& rng, int arity, std::int64_t max_m) {
  for (;;) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % max_m);
    std::vector<ExpVec> gens(1 + rng() % 2, ExpVec(arity));
    for (auto& g : gens)
      for (auto& x : g) x = static_cast<std::int64_t>(rng() % m);
    auto group = FiniteSubgroup::canonicalize(arity, m, gens);
    if (group.order() > 24) continue;
    LaurentPoly f(arity);
    std::vector<oracle::Term> terms;
    const int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
      ExpVec e(arity);
      for (auto& x : e) x = static_cast<std::int64_t>(rng() % 5) - 2;
      f.add_term(e, Int(static_cast<long>(rng() % 9) - 4));
    }
    if (f.is_zero()) continue;
    for (const auto& [e, c] : f.terms()) terms.push_back({e, c});
    return {f, terms, m, gens, group};
  }
}

std::vector<oracle::Vec> as_oracle(const std::vector<ExpVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(W, WorkedValuesForXMinusYMinus4) {
  auto f = LaurentPoly::parse("X1 - X2 - 4");
  EXPECT_EQ(W_n(f, 1), Int(-4));
  EXPECT_EQ(W_n(f, 2), Int(192));
  EXPECT_EQ(FactoredProduct::factor(W_n(f, 4)).render(), "2^16 * 3 * 5^3 * 13^2");
  EXPECT_EQ(FactoredProduct::factor(W_n(f, 6)).render(), "2^18 * 3^6 * 5^2 * 7^5 * 13^2 * 19^2 * 31^2");
}

TEST(W, MatchesProductOracleOnRandomSamples) {
  std::mt19937 rng(21);
  for (int i = 0; i < 60; ++i) {
    auto s = random_sample(rng, 1 + i % 2, 12);
    const auto pts = oracle::closure(as_oracle(s.gens), s.m, s.f.arity());
    EXPECT_EQ(W(s.f, s.group), oracle::product_over(s.terms, pts, s.m)) << s.f.str() << " on " << s.group.serialize();
  }
}

TEST(V, MatchesGeneratorProductAndMobiusForm) {
  std::mt19937 rng(22);
  for (int i = 0; i < 60; ++i) {
    auto s = random_sample(rng, 1 + i % 2, 12);
    const Int v = V(s.f, s.group);
    EXPECT_EQ(v, V_mobius(s.f, s.group)) << s.f.str() << " on " << s.group.serialize();
    if (s.group.is_cyclic()) {
      const auto gens = oracle::generators_of(as_oracle(s.gens), s.m, s.f.arity());
      EXPECT_EQ(v, oracle::product_over(s.terms, gens, s.m));
    } else {
      EXPECT_EQ(v, Int(1));
    }
  }
  EXPECT_EQ(V(LaurentPoly::parse("X1 - X2 - 4"), FiniteSubgroup::full(2, 2)), Int(1));
}

TEST(V, ProductOverSubgroupsIsW) {
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    auto s = random_sample(rng, 1 + i % 2, 10);
    Int prod = 1;
    for (const auto& sub : subgroups_of(s.group)) prod *= V(s.f, sub);
    EXPECT_EQ(prod, W(s.f, s.group));
  }
}

TEST(C, PowerOfCIsV) {
  std::mt19937 rng(24);
  for (int i = 0; i < 60; ++i) {
    auto s = random_sample(rng, 1 + i % 2, 12);
    if (!s.group.is_cyclic()) continue;
    const auto xi = a_generator(s.group);
    const auto st = stabilizer_index(xi, s.f.support());
    const Int c = C(s.f, xi);
    if (c == 0) continue;
    EXPECT_EQ(ipow(c, st.size), V(s.f, s.group)) << s.f.str() << " xi=" << xi.str();
  }
}

TEST(C, StabilizerExample) {
  // f = X + X^5 at i: f(i) = 2i, conjugate product 4.
  auto f = LaurentPoly::parse("X1 + X1^5");
  TorsionPoint i4(4, {1});
  EXPECT_EQ(C(f, i4), Int(4));
  EXPECT_EQ(stabilizer_index(i4, f.support()).size, 1u);
  // f = X^2 + 3 at i only sees i^2 = -1: C = 2 and |S| = 2.
  auto g = LaurentPoly::parse("X1^2 + 3");
  EXPECT_EQ(C(g, i4), Int(2));
  EXPECT_EQ(stabilizer_index(i4, g.support()).size, 2u);
  EXPECT_EQ(V(g, FiniteSubgroup::full(1, 4)), Int(4));
  EXPECT_EQ(C(LaurentPoly::parse("X1 + 2"), TorsionPoint(3, {1})), Int(3));
}

TEST(C, GaloisCosetReps) {
  EXPECT_EQ(galois_coset_reps(12, 4), (std::vector<std::int64_t>{1, 7}));
  EXPECT_EQ(galois_coset_reps(8, 1), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(galois_coset_reps(7, 7).size(), 6u);
}

TEST(FactorW, ReconstructsW) {
  std::mt19937 rng(25);
  for (int i = 0; i < 40; ++i) {
    auto s = random_sample(rng, 1 + i % 2, 12);
    Int prod = 1;
    for (const auto& r : factor_W(s.f, s.group)) {
      if (r.vanishing) {
        EXPECT_EQ(r.c, 0);
        continue;
      }
      prod *= ipow(r.c, r.s_size);
    }
    EXPECT_EQ(prod, W(s.f, s.group));
  }
}

TEST(FactorW, TwoXMinusOneOnMu6) {
  std::vector<Int> cs;
  for (const auto& r : factor_W(LaurentPoly::parse("2*X1 - 1"), FiniteSubgroup::full(1, 6))) cs.push_back(r.c);
  EXPECT_EQ(cs, (std::vector<Int>{1, -3, 7, 3}));
}

TEST(W, ClosedFormForLinearPolynomials) {
  std::mt19937 rng(26);
  for (int i = 0; i < 30; ++i) {
    const long a = 1 + rng() % 9, b = static_cast<long>(rng() % 19) - 9;
    const std::int64_t n = 1 + rng() % 30;
    LaurentPoly f(1, {{{1}, Int(a)}, {{0}, Int(-b)}});
    if (b == 0) continue;
    // prod (a zeta - b) = (-1)^n (b^n - a^n)
    Int expect = ipow(Int(b), n) - ipow(Int(a), n);
    if (n % 2) expect = -expect;
    if (expect == 0) continue;  // a = |b|: vanishing factors, not a closed form
    EXPECT_EQ(W_n(f, n), expect) << a << "X - " << b << " n=" << n;
  }
}

TEST(W, ResultantRouteMatchesDirectRoute) {
  std::mt19937 rng(27);
  for (int i = 0; i < 40; ++i) {
    auto s = random_sample(rng, 1 + i % 2, 6);
    const std::int64_t n = 1 + rng() % 6;
    EXPECT_EQ(W_n(s.f, n), W_direct(s.f, FiniteSubgroup::full(s.f.arity(), n))) << s.f.str() << " n=" << n;
  }
  // Vanishing factors force the fallback.
  auto f = LaurentPoly::parse("X1 - X2");
  EXPECT_EQ(W_n_resultant(f, 3), Int(0));
  EXPECT_EQ(W_n(f, 3), W_direct(f, FiniteSubgroup::full(2, 3)));
}

TEST(Divisibility, SubgroupValuesDivide) {
  std::mt19937 rng(28);
  for (int i = 0; i < 30; ++i) {
    auto s = random_sample(rng, 2, 8);
    for (const auto& sub : subgroups_of(s.group)) EXPECT_TRUE(divides_check(s.f, sub, s.group));
  }
}

TEST(StrongDivisibility, FailsForXMinusYMinus4) {
  auto f = LaurentPoly::parse("X1 - X2 - 4");
  auto r = strong_div_check(f, FiniteSubgroup::full(2, 4), FiniteSubgroup::full(2, 6));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.gcd.render(), "2^16 * 3 * 5^2 * 13^2");
  EXPECT_EQ(r.meet, FiniteSubgroup::full(2, 2));
  EXPECT_EQ(r.w_meet.render(), "2^6 * 3");
}

TEST(StrongDivisibility, HoldsForTwoXMinusOne) {
  auto f = LaurentPoly::parse("2*X1 - 1");
  for (std::int64_t a = 1; a <= 8; ++a)
    for (std::int64_t b = 1; b <= 8; ++b)
      EXPECT_TRUE(strong_div_check(f, FiniteSubgroup::full(1, a), FiniteSubgroup::full(1, b)).holds);
}

TEST(W, ArityMismatchAndCaps) {
  EXPECT_THROW(W(LaurentPoly::parse("X1"), FiniteSubgroup::full(2, 2)), DomainError);
  Limits tiny;
  tiny.max_elements = 3;
  EXPECT_THROW(W(LaurentPoly::parse("X1 + 2"), FiniteSubgroup::full(1, 5), tiny), ResourceCapError);
}
