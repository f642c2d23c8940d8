#include <gtest/gtest.h>

#include <random>

#include "ddseq/symbolic.hpp"
#include "oracles.hpp"

using namespace ddseq;

namespace {

// Homogenized Phi_d(U, V)^r with U = a(2), V = -a(0); variables [a(0), a(2)].
SymPoly homogenized_phi(std::int64_t d, unsigned r) {
  const std::vector<std::string> vars{"a(0)", "a(2)"};
  const auto phi = oracle::cyclotomic(d);
  const int deg = static_cast<int>(phi.size()) - 1;
  SymPoly out(vars);
  for (int i = 0; i <= deg; ++i) {
    if (phi[i] == 0) continue;
    Rat c(phi[i]);
    if ((deg - i) % 2) c = -c;
    out.add_term({deg - i, i}, c);
  }
  return pow(out, r);
}

std::vector<Rat> random_values(std::mt19937& rng, std::size_t k) {
  std::vector<Rat> v(k);
  for (auto& x : v) x = Rat(static_cast<long>(rng() % 11) - 5);
  return v;
}

}  // namespace

TEST(SymPoly, Arithmetic) {
  const std::vector<std::string> v{"a", "b"};
  auto a = SymPoly::variable(v, 0), b = SymPoly::variable(v, 1);
  auto s = pow(a + b, 2);
  EXPECT_EQ(s, a * a + SymPoly::constant(v, Rat(2)) * a * b + b * b);
  EXPECT_EQ(s.total_degree(), 2);
  EXPECT_EQ(s.eval({Rat(1), Rat(2)}), Rat(9));
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_TRUE(s.has_integer_coefficients());
}

TEST(GenericC, StabilizerExampleIsASquare) {
  // M = {1, 5} at i: f(i) = (a1 + a5) i.
  auto c = generic_C({{1}, {5}}, TorsionPoint(4, {1}));
  const std::vector<std::string> vars{"a(1)", "a(5)"};
  auto a1 = SymPoly::variable(vars, 0), a5 = SymPoly::variable(vars, 1);
  EXPECT_EQ(c, pow(a1 + a5, 2));
  EXPECT_EQ(c.eval({Rat(1), Rat(1)}), Rat(4));
}

TEST(GenericC, IntegralAndWarnsWithoutConstantTerm) {
  bool warn = false;
  auto c = generic_C({{0, 0}, {1, 0}, {0, 1}}, TorsionPoint(5, {1, 2}), &warn);
  EXPECT_TRUE(c.has_integer_coefficients());
  EXPECT_FALSE(warn);
  generic_C({{1}, {3}}, TorsionPoint(7, {1}), &warn);
  EXPECT_TRUE(warn);
}

TEST(GenericV, SpecializesToProductOracle) {
  std::mt19937 rng(41);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const int arity = 1 + i % 2;
    std::set<ExpVec> sup;
    while (sup.size() < 2 + rng() % 2) {
      ExpVec e(arity);
      for (auto& x : e) x = static_cast<std::int64_t>(rng() % 5) - 2;
      sup.insert(e);
    }
    std::vector<ExpVec> support(sup.begin(), sup.end());
    const std::int64_t m = 1 + rng() % 9;
    ExpVec g(arity);
    for (auto& x : g) x = rng() % m;
    auto group = FiniteSubgroup::canonicalize(arity, m, {g});
    auto vals = random_values(rng, support.size());
    std::vector<oracle::Term> terms;
    for (std::size_t k = 0; k < support.size(); ++k) terms.push_back({support[k], Int(vals[k].get_num())});
    const auto gens = oracle::generators_of({oracle::Vec(g.begin(), g.end())}, m, arity);
    const auto pts = oracle::closure({oracle::Vec(g.begin(), g.end())}, m, arity);
    const Int v_exact = oracle::product_over(terms, gens, m);
    const Int w_exact = oracle::product_over(terms, pts, m);
    // Vanishing factors are skipped numerically but not symbolically.
    bool vanishes = false;
    for (const auto& pt : pts) vanishes = vanishes || oracle::vanishes_at(terms, pt, m);
    if (vanishes) continue;
    ++checked;
    EXPECT_EQ(generic_V(support, group).eval(vals), Rat(v_exact));
    EXPECT_EQ(generic_W(support, group).eval(vals), Rat(w_exact));
  }
  EXPECT_GE(checked, 20);
}

TEST(GenericFactorization, ProductIsGenericW) {
  const std::vector<ExpVec> support{{0, 0}, {1, 0}, {0, 1}};
  for (std::int64_t n : {2, 3, 4}) {
    auto group = FiniteSubgroup::full(2, n);
    SymPoly prod = SymPoly::constant(coefficient_names(normalize_support(support)), Rat(1));
    for (const auto& r : generic_factorization(support, group)) {
      EXPECT_TRUE(r.c.has_integer_coefficients());
      prod = prod * pow(r.c, static_cast<unsigned>(r.s_size));
    }
    EXPECT_EQ(prod, generic_W(support, group)) << "n=" << n;
  }
}

TEST(GenericV, QuadraticInXSquaredFollowsTheIndexLaw) {
  // V(a2 X^2 + a0, mu_n) = F_{n'}^{phi(n)/phi(n')} with n' the order of zeta^2.
  for (std::int64_t n = 1; n <= 12; ++n) {
    const std::int64_t np = n % 2 ? n : n / 2;
    const auto r = static_cast<unsigned>(euler_phi(n) / euler_phi(np));
    EXPECT_EQ(generic_V({{0}, {2}}, FiniteSubgroup::full(1, n)), homogenized_phi(np, r)) << "n=" << n;
  }
}

TEST(GenericV, NonCyclicIsOne) {
  auto v = generic_V({{0, 0}, {1, 0}}, FiniteSubgroup::full(2, 2));
  EXPECT_EQ(v.eval({Rat(3), Rat(5)}), Rat(1));
}

TEST(LinearForm, NormalizedUpToRootOfUnity) {
  const std::vector<ExpVec> m{{0}, {1}};
  EXPECT_EQ(linear_form(m, TorsionPoint(6, {1})), (NormalForm{Rat(0), Rat(1, 6)}));
  // Multiplying every coefficient by a root of unity leaves the form unchanged.
  EXPECT_EQ(linear_form({{1}, {2}}, TorsionPoint(5, {1})), linear_form({{0}, {1}}, TorsionPoint(5, {1})));
}

TEST(Coprimality, DistinctCyclicGroupsInRankOne) {
  const std::vector<ExpVec> m{{0}, {1}};
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = 1; b <= 12; ++b) {
      if (a == b) continue;
      EXPECT_TRUE(coprimality_check(m, FiniteSubgroup::full(1, a), FiniteSubgroup::full(1, b)).coprime);
    }
}

TEST(Coprimality, NeedsASpanningSupport) {
  // M = {0, (1,0)} cannot tell (1,0) and (1,1) mod 2 apart.
  const std::vector<ExpVec> m{{0, 0}, {1, 0}};
  auto a = FiniteSubgroup::canonicalize(2, 2, {{1, 0}});
  auto b = FiniteSubgroup::canonicalize(2, 2, {{1, 1}});
  EXPECT_FALSE(coprimality_check(m, a, b).coprime);
  EXPECT_TRUE(coprimality_check({{0, 0}, {1, 0}, {0, 1}}, a, b).coprime);
}

TEST(StrongDivSymbolic, HoldsForSpanningSupports) {
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = 1; b <= 12; ++b)
      EXPECT_TRUE(strong_div_symbolic({{0}, {1}}, FiniteSubgroup::full(1, a), FiniteSubgroup::full(1, b)));
  const std::vector<ExpVec> m{{0, 0}, {1, 0}, {0, 1}};
  auto groups = subgroups_of(FiniteSubgroup::full(2, 4));
  for (std::size_t i = 0; i < groups.size(); i += 3)
    for (std::size_t j = 0; j < groups.size(); j += 5) EXPECT_TRUE(strong_div_symbolic(m, groups[i], groups[j]));
}

TEST(StrongDivSymbolic, RejectsMonomials) {
  EXPECT_THROW(strong_div_symbolic({{1}}, FiniteSubgroup::full(1, 2), FiniteSubgroup::full(1, 3)), DomainError);
}
