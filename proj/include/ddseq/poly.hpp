#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddseq/arith.hpp"
#include "ddseq/errors.hpp"

namespace ddseq {

// Dense univariate polynomials, coefficients low to high, no trailing zeros.
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

template <class C>
void trim(std::vector<C>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class C>
int degree(const std::vector<C>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class C>
std::vector<C> poly_add(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> r(std::max(a.size(), b.size()), C(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

template <class C>
std::vector<C> poly_sub(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> r(std::max(a.size(), b.size()), C(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class C>
std::vector<C> poly_mul(const std::vector<C>& a, const std::vector<C>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<C> r(a.size() + b.size() - 1, C(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class C>
std::vector<C> poly_scale(const std::vector<C>& a, const C& c) {
  std::vector<C> r;
  for (const auto& x : a) r.push_back(C(x * c));
  trim(r);
  return r;
}

template <class C>
std::vector<C> poly_pow(std::vector<C> base, unsigned e) {
  std::vector<C> r{C(1)};
  while (e) {
    if (e & 1u) r = poly_mul(r, base);
    e >>= 1;
    if (e) base = poly_mul(base, base);
  }
  return r;
}

/// Quotient and remainder by a divisor whose leading coefficient is +-1
/// (or any non-zero value when C is a field).
template <class C>
std::pair<std::vector<C>, std::vector<C>> poly_divmod(std::vector<C> a, const std::vector<C>& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  std::vector<C> q;
  const int db = degree(b);
  if (degree(a) >= db) q.assign(a.size() - b.size() + 1, C(0));
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    C c = a.back() / b.back();
    if (c * b.back() != a.back()) throw DomainError("poly_divmod: inexact leading division");
    q[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

ZPoly x_pow_minus_one(std::int64_t n);
Int poly_eval(const ZPoly& p, const Int& x);
Rat poly_eval(const QPoly& p, const Rat& x);
Int content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);
/// Primitive gcd in Z[x] with positive leading coefficient.
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);
/// a / b when b divides a in Z[x].
std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b);
QPoly to_q(const ZPoly& p);
/// Clears denominators; returns the integer polynomial and the scale used.
std::pair<ZPoly, Int> clear_denominators(const QPoly& p);
/// Exact square root in Q[x] with positive leading coefficient, if any.
std::optional<QPoly> poly_sqrt(const QPoly& p);
/// Reduction modulo x^n - 1.
ZPoly reduce_cyclic(const ZPoly& p, std::int64_t n);
std::string poly_str(const ZPoly& p, const std::string& var = "x");
std::string poly_str(const QPoly& p, const std::string& var = "x");

}  // namespace ddseq
