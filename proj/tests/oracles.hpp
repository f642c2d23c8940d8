#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the big-integer type.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Z = mpz_class;
using Poly = std::vector<Z>;  // low to high
using Vec = std::vector<std::int64_t>;

inline std::int64_t md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of a by monic b.
inline Poly div_monic(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size() - 1;; --i) {
    const Z c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    if (i == db) break;
  }
  return q;
}

// Phi_n as the quotient of x^n - 1 by Phi_d for proper divisors d.
inline Poly cyclotomic(std::int64_t n) {
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = div_monic(p, cyclotomic(d));
  return p;
}

inline Poly rem_monic(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const Z c = a.back();
    const std::size_t s = a.size() - 1 - db;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
    trim(a);
  }
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

struct Term {
  Vec exp;
  Z coeff;
};

// Closure of the generators inside (Z/m)^N.
inline std::set<Vec> closure(const std::vector<Vec>& gens, std::int64_t m, int arity) {
  std::set<Vec> seen{Vec(arity, 0)};
  std::vector<Vec> stack{Vec(arity, 0)};
  while (!stack.empty()) {
    Vec v = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      Vec w(arity);
      for (int i = 0; i < arity; ++i) w[i] = md(v[i] + g[i], m);
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen;
}

// f at the point v of mu_m^N, reduced in Z[x]/Phi_m.
inline Poly value_at(const std::vector<Term>& f, const Vec& v, std::int64_t m, const Poly& phi) {
  Poly val(static_cast<std::size_t>(m), 0);
  for (const auto& t : f) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += t.exp[i] * v[i];
    val[md(s, m)] += t.coeff;
  }
  return rem_monic(val, phi);
}

inline bool vanishes_at(const std::vector<Term>& f, const Vec& v, std::int64_t m) {
  return value_at(f, v, m, cyclotomic(m)).empty();
}

// prod of f over the listed points of mu_m^N, zeros skipped, in Z[x]/Phi_m.
inline Z product_over(const std::vector<Term>& f, const std::set<Vec>& points, std::int64_t m) {
  const Poly phi = cyclotomic(m);
  Poly acc{1};
  for (const auto& v : points) {
    const Poly val = value_at(f, v, m, phi);
    if (val.empty()) continue;
    acc = rem_monic(mul(acc, val), phi);
  }
  return acc.empty() ? Z(0) : acc[0];
}

// Points of the group generated by gens that generate the whole group.
inline std::set<Vec> generators_of(const std::vector<Vec>& gens, std::int64_t m, int arity) {
  const auto all = closure(gens, m, arity);
  std::set<Vec> out;
  for (const auto& v : all)
    if (closure({v}, m, arity).size() == all.size()) out.insert(v);
  return out;
}

// All subgroups of (Z/n)^2, as element sets, from pairs of elements.
inline std::set<std::set<Vec>> subgroups_rank2(std::int64_t n) {
  std::set<std::set<Vec>> out;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d) out.insert(closure({{a, b}, {c, d}}, n, 2));
  return out;
}

// Determinant of an integer matrix by fraction-free elimination (Bareiss).
inline Z det(std::vector<std::vector<Z>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Z prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] /= prev;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Sylvester resultant of two integer polynomials (low to high).
inline Z sylvester_resultant(const Poly& f, const Poly& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  std::vector<std::vector<Z>> s(m + n, std::vector<Z>(m + n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return det(s);
}

inline std::int64_t mult_order(std::int64_t a, std::int64_t p) {
  std::int64_t k = 1, x = md(a, p);
  while (x != 1) x = x * md(a, p) % p, ++k;
  return k;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace oracle
