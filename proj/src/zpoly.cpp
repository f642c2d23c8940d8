#include "ddseq/poly.hpp"

#include <sstream>

#include "ddseq/errors.hpp"

namespace ddseq {

ZPoly x_pow_minus_one(std::int64_t n) {
  ZPoly p(static_cast<std::size_t>(n) + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

Int poly_eval(const ZPoly& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat poly_eval(const QPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int content(const ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.empty()) return {};
  Int g = content(p);
  if (p.back() < 0) g = -g;
  ZPoly r;
  for (const auto& c : p) r.emplace_back(c / g);
  return r;
}

ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  if (b.empty()) throw DomainError("pseudo_rem by zero");
  const int db = degree(b);
  int e = degree(a) - db + 1;
  if (e < 0) return a;
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    Int lead = a.back();
    for (auto& c : a) c *= b.back();
    for (int i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    Int s = ipow(b.back(), static_cast<unsigned long>(e));
    for (auto& c : a) c *= s;
  }
  return a;
}

ZPoly poly_gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw DomainError("exact_quotient by zero");
  ZPoly r = a, q;
  const int db = degree(b);
  if (degree(r) >= db) q.assign(r.size() - b.size() + 1, Int(0));
  while (!r.empty() && degree(r) >= db) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    const int shift = degree(r) - db;
    Int c = r.back() / b.back();
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

QPoly to_q(const ZPoly& p) {
  QPoly r;
  for (const auto& c : p) r.emplace_back(c);
  return r;
}

std::pair<ZPoly, Int> clear_denominators(const QPoly& p) {
  Int l = 1;
  for (const auto& c : p) l = lcm(l, Int(c.get_den()));
  ZPoly r;
  for (const auto& c : p) r.emplace_back(c.get_num() * (l / c.get_den()));
  return {r, l};
}

std::optional<QPoly> poly_sqrt(const QPoly& p) {
  if (p.empty()) return QPoly{};
  if (degree(p) % 2 != 0) return std::nullopt;
  const Rat& lead = p.back();
  if (lead < 0) return std::nullopt;
  Int num = lead.get_num(), den = lead.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  const int dq = degree(p) / 2;
  QPoly q(dq + 1, Rat(0));
  q[dq] = Rat(sqrt(num), sqrt(den));
  // Coefficients from the top: the x^(dq+k) coefficient of q^2 fixes q[k].
  for (int k = dq - 1; k >= 0; --k) {
    Rat acc = p[dq + k];
    for (int i = k + 1; i <= dq; ++i) {
      int j = dq + k - i;
      if (j >= k + 1 && j <= dq) acc -= q[i] * q[j];
    }
    q[k] = acc / (2 * q[dq]);
    q[k].canonicalize();
  }
  if (poly_mul(q, q) != p) return std::nullopt;
  return q;
}

ZPoly reduce_cyclic(const ZPoly& p, std::int64_t n) {
  if (static_cast<std::int64_t>(p.size()) <= n) return p;
  ZPoly r(static_cast<std::size_t>(n), Int(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i % n] += p[i];
  trim(r);
  return r;
}

namespace {

template <class C>
std::string render(const std::vector<C>& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    C c = p[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (i == 0 || c != 1) os << c.get_str() << (i ? "*" : "");
    if (i >= 1) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string poly_str(const ZPoly& p, const std::string& var) { return render(p, var); }
std::string poly_str(const QPoly& p, const std::string& var) { return render(p, var); }

}  // namespace ddseq
