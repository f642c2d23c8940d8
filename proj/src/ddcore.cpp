#include "ddseq/ddcore.hpp"

#include "ddseq/kernels.hpp"
#include "ddseq/resultant.hpp"

namespace ddseq {

RecPoly iterated_root_product(const RecPoly& p0, std::int64_t n, int peel) {
  if (n < 1) throw DomainError("n must be positive");
  RecPoly p = p0;
  for (int left = peel; left > 0; --left) {
    p = p.reduce_cyclic(n, left);
    const int inner = p.depth() - 1;
    if (p.is_zero()) return RecPoly(inner);
    std::vector<RecPoly> base(static_cast<std::size_t>(n) + 1, RecPoly(inner));
    base[0] = RecPoly::constant(inner, -1);
    base[n] = RecPoly::constant(inner, 1);
    p = resultant<RecPoly>(base, p.coeffs(), RecPoly::constant(inner, 1));
  }
  return p;
}

Int W_n_resultant(const LaurentPoly& f, std::int64_t n) {
  if (f.is_zero()) throw DomainError("W: f is zero");
  const int N = f.arity();
  const ExpVec shift = f.min_exponents();
  std::vector<std::pair<std::vector<long>, Int>> terms;
  for (const auto& [e, c] : f.terms()) {
    std::vector<long> v;
    for (int i = 0; i < N; ++i) v.push_back(static_cast<long>(e[i] - shift[i]));
    terms.emplace_back(std::move(v), c);
  }
  RecPoly res = iterated_root_product(RecPoly::from_terms(N, terms), n, N);
  Int value = res.value();
  // prod over mu_n^N of zeta^shift = (-1)^((n+1) * n^(N-1) * sum(shift))
  std::int64_t parity = (n + 1) % 2;
  if (N > 1) parity *= n % 2;
  std::int64_t s = 0;
  for (auto x : shift) s += x;
  if (parity * mod(s, 2) == 1) value = -value;
  return value;
}

Int W_direct(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits) {
  if (f.arity() != group.arity()) throw DomainError("W: arity mismatch");
  if (f.is_zero()) throw DomainError("W: f is zero");
  std::vector<TorsionPoint> reps;
  for (auto& [sub, xi] : cyclic_subgroups_of(group, limits)) reps.push_back(xi);
  Int w = 1;
  for (const auto& v : orbit_norms_omp(f, reps))
    if (v != 0) w *= v;
  return w;
}

Int W_n(const LaurentPoly& f, std::int64_t n, const Limits& limits) {
  Int w = W_n_resultant(f, n);
  if (w != 0) return w;
  return W_direct(f, FiniteSubgroup::full(f.arity(), n), limits);
}

Int W(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits) {
  if (f.arity() != group.arity()) throw DomainError("W: arity mismatch");
  if (group.order() > limits.max_elements) throw ResourceCapError("W: group order exceeds the element cap");
  if (group.is_full()) return W_n(f, group.exponent(), limits);
  return W_direct(f, group, limits);
}

Int V(const LaurentPoly& f, const FiniteSubgroup& group, const Limits&) {
  if (f.arity() != group.arity()) throw DomainError("V: arity mismatch");
  if (!group.is_cyclic()) return 1;
  auto v = eval_at(f, a_generator(group));
  return v.is_zero() ? Int(1) : norm(v);
}

Int V_mobius(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits) {
  Int num = 1, den = 1;
  for (const auto& [sub, mu] : mobius_below(group, limits)) {
    if (mu == 0) continue;
    Int w = W_direct(f, sub, limits);
    Int p = ipow(w, static_cast<unsigned long>(std::abs(mu)));
    if (mu > 0) num *= p;
    else den *= p;
  }
  ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()), "Moebius product of W values is integral");
  return num / den;
}

Stabilizer stabilizer_index(const TorsionPoint& xi, const std::vector<ExpVec>& support) {
  const std::int64_t n = xi.order();
  Stabilizer s;
  for (const auto& m : support) {
    if (static_cast<int>(m.size()) != xi.arity()) throw DomainError("stabilizer_index: arity mismatch");
    std::int64_t t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t = mod(t + mod(m[i], n) * xi.exponents()[i], n);
    s.d = std::lcm(s.d, n / std::gcd(n, t));
  }
  s.size = static_cast<std::uint64_t>(euler_phi(n) / euler_phi(s.d));
  return s;
}

std::vector<std::int64_t> galois_coset_reps(std::int64_t n, std::int64_t d) {
  if (d < 1 || n % d != 0) throw DomainError("galois_coset_reps: d must divide n");
  std::vector<std::int64_t> out;
  for (auto u : units_mod(d)) {
    std::int64_t k = (u == 0) ? 1 : u;
    while (std::gcd(k, n) != 1) k += d;
    out.push_back(k);
  }
  return out;
}

Int C(const LaurentPoly& f, const TorsionPoint& xi) {
  if (f.arity() != xi.arity()) throw DomainError("C: arity mismatch");
  const std::int64_t n = xi.order();
  const auto st = stabilizer_index(xi, f.support());
  auto value = eval_at(f, xi);
  CyclotomicInt acc(n, Int(1));
  for (auto k : galois_coset_reps(n, st.d)) acc = acc * galois_apply(k, value);
  auto c = acc.as_integer();
  ensure(c.has_value(), "C_f(xi) descends to an integer");
  return *c;
}

std::vector<CFactor> factor_W(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits) {
  auto cyc = cyclic_subgroups_of(group, limits);
  const auto support = f.support();
  std::vector<CFactor> out;
  out.reserve(cyc.size());
  for (auto& [sub, xi] : cyc) out.push_back(CFactor{sub, xi, Int(0), 1, false});
  const auto count = static_cast<std::int64_t>(out.size());
  for (auto& row : out) (void)cyclotomic_poly(row.rep.order());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& row = out[i];
    row.vanishing = eval_at(f, row.rep).is_zero();
    row.c = C(f, row.rep);
    row.s_size = stabilizer_index(row.rep, support).size;
  }
  Int prod = 1;
  for (const auto& row : out)
    if (!row.vanishing) prod *= ipow(row.c, static_cast<unsigned long>(row.s_size));
  ensure(prod == W(f, group, limits), "product of C^|S| over cyclic subgroups equals W");
  return out;
}

bool divides_check(const LaurentPoly& f, const FiniteSubgroup& sub, const FiniteSubgroup& group,
                   const Limits& limits) {
  if (!contains(group, sub)) throw DomainError("divides_check: subgroup is not contained in group");
  Int a = W(f, sub, limits), b = W(f, group, limits);
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

StrongDivResult strong_div_check(const LaurentPoly& f, const FiniteSubgroup& a, const FiniteSubgroup& b,
                                 const Limits& limits) {
  auto meet = intersection(a, b);
  Int w1 = W(f, a, limits), w2 = W(f, b, limits), wm = W(f, meet, limits);
  Int g = gcd(w1, w2);
  return StrongDivResult{g == abs(wm), FactoredProduct::factor(g), FactoredProduct::factor(abs(wm)), w1, w2,
                         meet};
}

}  // namespace ddseq
