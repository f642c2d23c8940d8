#include <gtest/gtest.h>

#include <random>

#include "ddseq/ddcore.hpp"
#include "ddseq/finite_field.hpp"
#include "oracles.hpp"

using namespace ddseq;

namespace {

// g has no monic factor of degree <= deg/2, by trial division over F_p.
bool brute_irreducible(const std::vector<std::uint64_t>& g, std::uint64_t p) {
  const int k = static_cast<int>(g.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    std::vector<std::uint64_t> h(d + 1, 0);
    h[d] = 1;
    for (;;) {
      // remainder of g by monic h
      std::vector<std::uint64_t> r = g;
      for (int i = k; i >= d; --i) {
        const auto c = r[i];
        for (int j = 0; j <= d; ++j) r[i - d + j] = (r[i - d + j] + p * p - c * h[j] % p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
      int i = 0;
      while (i < d && ++h[i] == p) h[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace

TEST(FiniteField, IrreduciblesPassTrialDivision) {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (int k = 1; k <= 5; ++k) {
      auto g = find_irreducible(p, k);
      ASSERT_EQ(g.size(), static_cast<std::size_t>(k) + 1);
      EXPECT_EQ(g.back(), 1u);
      EXPECT_TRUE(brute_irreducible(g, p)) << "p=" << p << " k=" << k;
    }
}

TEST(FiniteField, RootOfUnityHasExactOrder) {
  for (std::uint64_t p : {3, 5, 7, 11, 13})
    for (std::int64_t e = 1; e <= 30; ++e) {
      if (e % static_cast<std::int64_t>(p) == 0) continue;
      auto f = FieldExt::for_roots_of_unity(p, e);
      EXPECT_EQ(f.k(), e == 1 ? 1 : oracle::mult_order(static_cast<std::int64_t>(p), e));
      auto z = f.root_of_unity(e);
      auto acc = f.one();
      for (std::int64_t j = 1; j <= e; ++j) {
        acc = f.mul(acc, z);
        EXPECT_EQ(f.is_one(acc), j == e) << "p=" << p << " e=" << e << " j=" << j;
      }
    }
}

TEST(FiniteField, FieldAxiomsOnSamples) {
  FieldExt f(5, 3);
  std::mt19937 rng(1);
  auto rnd = [&] {
    FieldExt::Elt e(3);
    for (auto& x : e) x = rng() % 5;
    return e;
  };
  for (int i = 0; i < 50; ++i) {
    auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    if (!f.is_zero(a)) {
      EXPECT_TRUE(f.is_one(f.pow(a, Int(124))));
    }
  }
  EXPECT_THROW(FieldExt(4, 2), DomainError);
  EXPECT_THROW(FieldExt::for_roots_of_unity(3, 6), DomainError);
}

TEST(FiniteField, WModPMatchesExactReduction) {
  std::mt19937 rng(31);
  const std::vector<std::uint64_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  int checked = 0;
  while (checked < 60) {
    const int arity = 1 + static_cast<int>(rng() % 2);
    const std::uint64_t p = primes[rng() % primes.size()];
    const std::int64_t m = 1 + rng() % 12;
    if (m % static_cast<std::int64_t>(p) == 0) continue;
    std::vector<ExpVec> gens{ExpVec(arity)};
    for (auto& x : gens[0]) x = rng() % m;
    auto g = FiniteSubgroup::canonicalize(arity, m, gens);
    LaurentPoly f(arity);
    for (int t = 0; t < 3; ++t) {
      ExpVec e(arity);
      for (auto& x : e) x = static_cast<std::int64_t>(rng() % 5) - 2;
      f.add_term(e, Int(static_cast<long>(rng() % 11) - 5));
    }
    if (f.is_zero()) continue;
    const Int w = W(f, g);
    EXPECT_EQ(W_mod_p(f, g, p), mpz_fdiv_ui(w.get_mpz_t(), p)) << f.str() << " " << g.serialize() << " p=" << p;
    ++checked;
  }
}
