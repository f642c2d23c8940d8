#include "ddseq/finite_field.hpp"

#include <map>
#include <mutex>

#include "ddseq/cyclo.hpp"

namespace ddseq {

namespace {

using U = std::uint64_t;
using UPoly = std::vector<U>;  // over F_p, low to high

U mulmod(U a, U b, U p) { return static_cast<U>(static_cast<unsigned __int128>(a) * b % p); }

U invmod(U a, U p) { return static_cast<U>(powmod64(static_cast<std::int64_t>(a), p - 2, static_cast<std::int64_t>(p))); }

void trim_u(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b, U p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim_u(r);
  return r;
}

UPoly umod(UPoly a, const UPoly& g, U p) {
  trim_u(a);
  const std::size_t dg = g.size() - 1;
  const U inv = invmod(g.back(), p);
  while (a.size() > dg) {
    const std::size_t shift = a.size() - 1 - dg;
    const U c = mulmod(a.back(), inv, p);
    for (std::size_t i = 0; i <= dg; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, g[i], p)) % p;
    trim_u(a);
  }
  return a;
}

UPoly upowmod(UPoly base, const Int& e, const UPoly& g, U p) {
  UPoly r{1};
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = umod(umul(r, r, p), g, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = umod(umul(r, base, p), g, p);
  }
  return r;
}

UPoly ugcd(UPoly a, UPoly b, U p) {
  trim_u(a);
  trim_u(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly usub(UPoly a, const UPoly& b, U p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim_u(a);
  return a;
}

// Ben-Or: g is irreducible iff gcd(g, x^(p^i) - x) = 1 for 1 <= i <= k/2.
// Reducible candidates usually fail at a small i.
bool ben_or_irreducible(const UPoly& g, U p) {
  const int k = static_cast<int>(g.size()) - 1;
  const UPoly x = umod(UPoly{0, 1}, g, p);
  const Int pp(static_cast<unsigned long>(p));
  UPoly h = x;
  for (int i = 1; i <= k / 2; ++i) {
    h = upowmod(h, pp, g, p);
    if (ugcd(g, usub(h, x, p), p).size() != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int k) {
  if (k < 1) throw DomainError("find_irreducible: degree must be positive");
  if (k == 1) return {0, 1};
  static std::mutex mu;
  static std::map<std::pair<U, int>, UPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({p, k}); it != memo.end()) return it->second;
  }
  UPoly g(static_cast<std::size_t>(k) + 1, 0);
  g[k] = 1;
  // Lower coefficients run through F_p^k as a counter, constant term first.
  for (;;) {
    if (g[0] != 0 && ben_or_irreducible(g, p)) {
      std::lock_guard lock(mu);
      memo.emplace(std::pair{p, k}, g);
      return g;
    }
    int i = 0;
    while (i < k && ++g[i] == p) g[i++] = 0;
    if (i == k) throw InvariantError("no irreducible polynomial found");
  }
}

FieldExt::FieldExt(std::uint64_t p, int k) : p_(p), k_(k) {
  if (!is_prime64(static_cast<std::int64_t>(p))) throw DomainError("field characteristic must be prime");
  g_ = find_irreducible(p, k);
}

FieldExt FieldExt::for_roots_of_unity(std::uint64_t p, std::int64_t e) {
  if (std::gcd(static_cast<std::int64_t>(p), e) != 1) throw DomainError("p divides the root-of-unity order");
  const int k = e == 1 ? 1 : static_cast<int>(multiplicative_order(static_cast<std::int64_t>(p % e), e));
  return FieldExt(p, k);
}

FieldExt::Elt FieldExt::one() const {
  Elt r(k_, 0);
  r[0] = 1;
  return r;
}

FieldExt::Elt FieldExt::from_int(const Int& v) const {
  Elt r(k_, 0);
  r[0] = mpz_fdiv_ui(v.get_mpz_t(), p_);
  return r;
}

FieldExt::Elt FieldExt::add(const Elt& a, const Elt& b) const {
  Elt r(k_);
  for (int i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FieldExt::Elt FieldExt::mul(const Elt& a, const Elt& b) const {
  UPoly r = umod(umul(UPoly(a.begin(), a.end()), UPoly(b.begin(), b.end()), p_), g_, p_);
  r.resize(k_, 0);
  return r;
}

FieldExt::Elt FieldExt::pow(Elt a, const Int& e) const {
  UPoly r = upowmod(a, e, g_, p_);
  r.resize(k_, 0);
  return r;
}

bool FieldExt::is_zero(const Elt& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

bool FieldExt::is_one(const Elt& a) const { return a == one(); }

FieldExt::Elt FieldExt::root_of_unity(std::int64_t e) const {
  Int group = ipow(Int(static_cast<unsigned long>(p_)), static_cast<unsigned long>(k_)) - 1;
  if (!mpz_divisible_ui_p(group.get_mpz_t(), static_cast<unsigned long>(e)))
    throw DomainError("field does not contain the requested roots of unity");
  const Int cof = group / static_cast<unsigned long>(e);
  const auto primes = prime_factors(e);
  Elt cand(k_, 0);
  for (;;) {
    int i = 0;
    while (i < k_ && ++cand[i] == p_) cand[i++] = 0;
    if (i == k_) throw InvariantError("no root of unity of the requested order");
    Elt r = pow(cand, cof);
    if (is_zero(r)) continue;
    bool exact = true;
    for (auto q : primes)
      if (is_one(pow(r, Int(static_cast<unsigned long>(e / q))))) exact = false;
    if (exact) return r;
  }
}

std::uint64_t W_mod_p(const LaurentPoly& f, const FiniteSubgroup& group, std::uint64_t p, const Limits& limits) {
  if (f.arity() != group.arity()) throw DomainError("W_mod_p: arity mismatch");
  const std::int64_t e = group.exponent();
  static std::mutex mu;
  static std::map<std::pair<U, std::int64_t>, std::pair<FieldExt, FieldExt::Elt>> memo;
  std::unique_lock lock(mu);
  auto it = memo.find({p, e});
  if (it == memo.end()) {
    lock.unlock();
    FieldExt fresh = FieldExt::for_roots_of_unity(p, e);
    auto root = fresh.root_of_unity(e);
    lock.lock();
    it = memo.emplace(std::pair{p, e}, std::pair{std::move(fresh), std::move(root)}).first;
  }
  const FieldExt field = it->second.first;
  const auto g = it->second.second;
  lock.unlock();
  std::vector<FieldExt::Elt> powers{field.one()};
  for (std::int64_t j = 1; j < e; ++j) powers.push_back(field.mul(powers.back(), g));
  std::vector<std::pair<ExpVec, std::uint64_t>> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, mpz_fdiv_ui(c.get_mpz_t(), p));

  auto acc = field.one();
  for (const auto& [sub, xi] : cyclic_subgroups_of(group, limits)) {
    if (eval_at(f, xi).is_zero()) continue;
    const std::int64_t scale = e / xi.order();
    for (auto k : units_mod(xi.order())) {
      const std::int64_t kk = (k == 0) ? 1 : k;
      auto val = field.zero();
      for (const auto& [m, c] : terms) {
        std::int64_t s = 0;
        for (int i = 0; i < f.arity(); ++i) s = mod(s + mod(m[i], e) * (xi.exponents()[i] * scale % e) % e * kk, e);
        auto term = powers[static_cast<std::size_t>(s)];
        for (auto& x : term) x = mulmod(x, c, p);
        val = field.add(val, term);
      }
      acc = field.mul(acc, val);
    }
  }
  for (int i = 1; i < field.k(); ++i) ensure(acc[i] == 0, "W mod p lies in the prime field");
  return acc[0];
}

}  // namespace ddseq
