#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "ddseq/cyclo.hpp"
#include "ddseq/factored.hpp"
#include "ddseq/kernels.hpp"
#include "ddseq/resultant.hpp"
#include "oracles.hpp"

using namespace ddseq;

namespace {

ZPoly random_poly(std::mt19937& rng, int max_deg, int bound) {
  ZPoly p(1 + rng() % (max_deg + 1));
  for (auto& c : p) c = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  if (p.back() == 0) p.back() = 1;
  return p;
}

std::complex<double> to_complex(const CyclotomicInt& a) {
  const double t = 2 * M_PI / static_cast<double>(a.conductor());
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) z += a.coeffs()[i].get_d() * std::polar(1.0, t * i);
  return z;
}

}  // namespace

TEST(ZPoly, DivmodAndGcd) {
  ZPoly a{Int(-1), Int(0), Int(1)};   // x^2 - 1
  ZPoly b{Int(1), Int(1)};            // x + 1
  auto [q, r] = poly_divmod(a, b);
  EXPECT_EQ(q, (ZPoly{Int(-1), Int(1)}));
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(poly_gcd(poly_mul(a, ZPoly{Int(3), Int(2)}), poly_mul(b, ZPoly{Int(5), Int(0), Int(1)})), b);
  EXPECT_EQ(exact_quotient(a, ZPoly{Int(2), Int(1)}), std::nullopt);
}

TEST(ZPoly, GcdDividesBothOnRandomInputs) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    ZPoly c = random_poly(rng, 3, 4), a = poly_mul(c, random_poly(rng, 3, 4)), b = poly_mul(c, random_poly(rng, 3, 4));
    ZPoly g = poly_gcd(a, b);
    ASSERT_FALSE(g.empty());
    EXPECT_TRUE(exact_quotient(a, g).has_value());
    EXPECT_TRUE(exact_quotient(b, g).has_value());
    EXPECT_GE(degree(g), degree(primitive_part(c)));
  }
}

TEST(QPoly, SquareRoot) {
  QPoly p = to_q(ZPoly{Int(1), Int(2), Int(1)});
  auto r = poly_sqrt(p);
  ASSERT_TRUE(r);
  EXPECT_EQ(poly_mul(*r, *r), p);
  EXPECT_FALSE(poly_sqrt(to_q(ZPoly{Int(1), Int(0), Int(1)})));
  QPoly q{Rat(1, 4), Rat(1), Rat(1)};  // (x + 1/2)^2
  ASSERT_TRUE(poly_sqrt(q));
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    ZPoly a = random_poly(rng, 5, 6), b = random_poly(rng, 5, 6);
    if (a.size() < 2 || b.size() < 2) continue;
    EXPECT_EQ(resultant(a, b, Int(1)), oracle::sylvester_resultant(a, b)) << poly_str(a) << " , " << poly_str(b);
  }
}

TEST(Cyclotomic, MatchesQuotientOracle) {
  for (std::int64_t n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic_poly(n), oracle::cyclotomic(n)) << n;
  EXPECT_EQ(degree(cyclotomic_poly(105)), euler_phi(105));
}

TEST(CyclotomicInt, ArithmeticAgreesWithComplexValues) {
  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) {
    const std::int64_t m = 1 + rng() % 30;
    auto a = CyclotomicInt::from_poly(m, random_poly(rng, 8, 3));
    auto b = CyclotomicInt::from_poly(m, random_poly(rng, 8, 3));
    EXPECT_LT(std::abs(to_complex(a * b) - to_complex(a) * to_complex(b)), 1e-6);
    EXPECT_LT(std::abs(to_complex(a + b) - to_complex(a) - to_complex(b)), 1e-9);
  }
  auto z = CyclotomicInt::root_power(6, 1);
  EXPECT_EQ(z * z * z, CyclotomicInt(6, Int(-1)));
  EXPECT_EQ(CyclotomicInt::root_power(5, -1) * CyclotomicInt::root_power(5, 1), CyclotomicInt(5, Int(1)));
}

TEST(CyclotomicInt, NormAgreesWithResultantAndConjugates) {
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    const std::int64_t m = 1 + rng() % 24;
    auto a = CyclotomicInt::from_poly(m, random_poly(rng, 6, 3));
    EXPECT_EQ(norm(a), norm_resultant(a));
    std::complex<double> prod = 1;
    for (auto k : units_mod(m)) prod *= to_complex(galois_apply(k == 0 ? 1 : k, a));
    EXPECT_NEAR(prod.real(), norm(a).get_d(), 1e-6 * std::max(1.0, std::abs(norm(a).get_d())));
  }
  EXPECT_EQ(norm(CyclotomicInt::from_poly(7, {Int(-1), Int(2)})), Int(127));
}

TEST(ProductOverRoots, ClosedFormAndSkipZeros) {
  for (int n = 1; n <= 12; ++n) {
    // prod (2 zeta - 1) = (-1)^n (1 - 2^n)
    Int expect = (n % 2 ? Int(-1) : Int(1)) * (Int(1) - ipow(Int(2), n));
    EXPECT_EQ(product_over_roots({Int(-1), Int(2)}, 0, n, false), expect) << n;
  }
  EXPECT_EQ(product_over_roots({Int(-1), Int(1)}, 0, 3, true), Int(3));
  EXPECT_EQ(product_over_roots({Int(-1), Int(1)}, 0, 3, false), Int(0));
}

TEST(Laurent, ParseAndPrint) {
  auto f = LaurentPoly::parse("X1 + X1^-1 + X2 + X2^-1 + 5");
  EXPECT_EQ(f.arity(), 2);
  EXPECT_EQ(f.str(), "X1 + X2 + 5 + X2^-1 + X1^-1");
  EXPECT_EQ(LaurentPoly::parse(f.str()), f);
  EXPECT_EQ(LaurentPoly::parse("2*X1*X2^(-1) - 3").str(), "2*X1*X2^-1 - 3");
  EXPECT_EQ(LaurentPoly::parse("X1 - X1").str(), "0");
  EXPECT_EQ(LaurentPoly::parse("X1 - X2 - 4").l1_norm(), Int(6));
  EXPECT_THROW(LaurentPoly::parse("X1 +"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("Y1"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("X0"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("X3", 2), ParseError);
  EXPECT_THROW(LaurentPoly::parse(""), ParseError);
}

TEST(Laurent, PrintIsIdempotentOnRandomPolys) {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly f(3);
    for (int t = 0; t < 4; ++t)
      f.add_term({static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3)},
                 Int(static_cast<long>(rng() % 11) - 5));
    if (f.is_zero()) continue;
    const auto s = f.str();
    EXPECT_EQ(LaurentPoly::parse(s, 3), f);
    EXPECT_EQ(LaurentPoly::parse(s, 3).str(), s);
  }
}

TEST(Laurent, FnvIsTheStandardFunction) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Factored, RenderAndJsonRoundTrip) {
  auto f = FactoredProduct::factor(Int(-192));
  EXPECT_EQ(f.render(), "2^6 * 3");
  EXPECT_EQ(f.sign, -1);
  EXPECT_EQ(f.value(), Int(-192));
  EXPECT_EQ(FactoredProduct::from_json(f.to_json()), f);
  EXPECT_EQ(FactoredProduct::factor(Int(1)).render(), "1");
  EXPECT_EQ(FactoredProduct::factor(Int(0)).render(), "0");
  Int big("1000000000000000000000007");  // beyond trial division
  auto g = FactoredProduct::factor(big * 12);
  EXPECT_EQ(g.value(), big * 12);
}

TEST(Kernels, SerialAndParallelAgree) {
  auto f = LaurentPoly::parse("X1 - X2 - 4");
  std::vector<TorsionPoint> reps;
  for (const auto& [g, xi] : cyclic_subgroups_of(FiniteSubgroup::full(2, 12))) reps.push_back(xi);
  EXPECT_EQ(orbit_norms_serial(f, reps), orbit_norms_omp(f, reps));
  auto p = NumericPoly::from(LaurentPoly::parse("1 + X1 + X2"));
  auto a = torus_log_sum_serial(p, 128), b = torus_log_sum_omp(p, 128);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(a.shifted, b.shifted);
  EXPECT_NEAR(a.sum, b.sum, 1e-9 * std::max(1.0, std::abs(a.sum)));
}
