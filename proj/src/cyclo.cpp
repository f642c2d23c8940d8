#include "ddseq/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ddseq/resultant.hpp"

namespace ddseq {

namespace {

std::mutex phi_mutex;
std::map<std::int64_t, ZPoly> phi_cache;

ZPoly compute_phi(std::int64_t m) {
  ZPoly p = x_pow_minus_one(m);
  for (auto d : divisors(m)) {
    if (d == m) break;
    auto [q, r] = poly_divmod(p, cyclotomic_poly(d));
    ensure(r.empty(), "x^m - 1 is divisible by Phi_d");
    p = std::move(q);
  }
  return p;
}

// Remainder modulo the monic polynomial phi, padded to length deg(phi).
std::vector<Int> reduce_mod(ZPoly p, const ZPoly& phi) {
  const int d = degree(phi);
  trim(p);
  while (degree(p) >= d) {
    const int shift = degree(p) - d;
    Int lead = p.back();
    for (int i = 0; i <= d; ++i) p[shift + i] -= lead * phi[i];
    trim(p);
  }
  p.resize(static_cast<std::size_t>(d), Int(0));
  return p;
}

void check_conductor(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.conductor() != b.conductor()) throw DomainError("cyclotomic conductors differ");
}

}  // namespace

const ZPoly& cyclotomic_poly(std::int64_t m) {
  if (m < 1) throw DomainError("cyclotomic_poly: m must be positive");
  {
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(m);
    if (it != phi_cache.end()) return it->second;
  }
  ZPoly p = compute_phi(m);
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_cache.emplace(m, std::move(p)).first->second;
}

CyclotomicInt::CyclotomicInt(std::int64_t conductor, const Int& value) : m_(conductor) {
  if (conductor < 1) throw DomainError("conductor must be positive");
  c_.assign(static_cast<std::size_t>(euler_phi(conductor)), Int(0));
  c_[0] = value;
}

CyclotomicInt CyclotomicInt::from_poly(std::int64_t conductor, const ZPoly& p) {
  if (conductor < 1) throw DomainError("conductor must be positive");
  CyclotomicInt r;
  r.m_ = conductor;
  r.c_ = reduce_mod(p, cyclotomic_poly(conductor));
  return r;
}

CyclotomicInt CyclotomicInt::root_power(std::int64_t conductor, std::int64_t j) {
  ZPoly p(static_cast<std::size_t>(mod(j, conductor)) + 1, Int(0));
  p.back() = 1;
  return from_poly(conductor, p);
}

bool CyclotomicInt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

std::optional<Int> CyclotomicInt::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

std::string CyclotomicInt::str() const {
  ZPoly p = c_;
  trim(p);
  std::ostringstream os;
  os << poly_str(p, "w") << " (mod Phi_" << m_ << ")";
  return os.str();
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
  check_conductor(a, b);
  CyclotomicInt r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CyclotomicInt operator-(const CyclotomicInt& a) {
  CyclotomicInt r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) { return a + (-b); }

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  check_conductor(a, b);
  ZPoly pa = a.c_, pb = b.c_;
  trim(pa);
  trim(pb);
  return CyclotomicInt::from_poly(a.m_, poly_mul(pa, pb));
}

CyclotomicInt galois_apply(std::int64_t k, const CyclotomicInt& a) {
  const std::int64_t m = a.conductor();
  if (std::gcd(mod(k, m), m) != 1 && m != 1) throw DomainError("galois_apply: k is not a unit");
  ZPoly p(static_cast<std::size_t>(m), Int(0));
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    if (a.coeffs()[j] == 0) continue;
    p[static_cast<std::size_t>(mod(static_cast<std::int64_t>(j) * k, m))] += a.coeffs()[j];
  }
  return CyclotomicInt::from_poly(m, p);
}

Int norm(const CyclotomicInt& a) {
  const std::int64_t m = a.conductor();
  CyclotomicInt acc(m, Int(1));
  for (auto k : units_mod(m)) acc = acc * galois_apply(m == 1 ? 1 : k, a);
  auto v = acc.as_integer();
  ensure(v.has_value(), "norm of a cyclotomic integer is rational");
  return *v;
}

Int norm_resultant(const CyclotomicInt& a) {
  ZPoly p = a.coeffs();
  trim(p);
  if (a.conductor() == 1) return p.empty() ? Int(0) : p[0];
  return resultant<Int>(cyclotomic_poly(a.conductor()), p, Int(1));
}

CyclotomicInt eval_at_vector(const LaurentPoly& f, std::int64_t conductor, const ExpVec& v) {
  if (static_cast<int>(v.size()) != f.arity()) throw DomainError("eval_at: arity mismatch");
  ZPoly acc(static_cast<std::size_t>(conductor), Int(0));
  for (const auto& [e, c] : f.terms()) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s = mod(s + mod(e[i], conductor) * v[i], conductor);
    acc[static_cast<std::size_t>(s)] += c;
  }
  return CyclotomicInt::from_poly(conductor, acc);
}

CyclotomicInt eval_at(const LaurentPoly& f, const TorsionPoint& xi) {
  return eval_at_vector(f, xi.order(), xi.exponents());
}

Int product_over_roots(const ZPoly& g0, std::int64_t shift, std::int64_t n, bool skip_zeros) {
  if (n < 1) throw DomainError("product_over_roots: n must be positive");
  ZPoly g = g0;
  trim(g);
  if (g.empty()) throw DomainError("product_over_roots: g is zero");
  // The roots of x^n - 1 multiply to (-1)^(n+1); the shift contributes that to
  // the power -shift, and the sign is its own inverse.
  auto root_sign = [](std::int64_t deg, const Int& const_term, std::int64_t e) {
    // product of the roots of a monic degree-deg polynomial: (-1)^deg * Q(0)
    Int s = (deg % 2 == 0) ? const_term : Int(-const_term);
    return (mod(e, 2) == 0) ? Int(1) : s;
  };
  ZPoly r = reduce_cyclic(g, n);
  ZPoly base = x_pow_minus_one(n);
  if (r.empty()) return skip_zeros ? Int(1) : Int(0);
  if (skip_zeros) {
    ZPoly h = poly_gcd(base, r);
    if (degree(h) > 0) {
      auto [q, rem] = poly_divmod(base, h);
      ensure(rem.empty(), "gcd divides x^n - 1");
      if (degree(q) == 0) return Int(1);
      Int res = resultant<Int>(q, r, Int(1));
      return root_sign(degree(q), q[0], shift) * res;
    }
  }
  Int res = resultant<Int>(base, r, Int(1));
  return root_sign(n, Int(-1), shift) * res;
}

}  // namespace ddseq
