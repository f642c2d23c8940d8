#include "ddseq/ptfamily.hpp"

#include <set>

namespace ddseq {

namespace {

void check_n(std::int64_t n, const PtLimits& limits) {
  if (n < 1) throw DomainError("n must be positive");
  if (n > limits.max_n) throw ResourceCapError("P_T family: n exceeds the configured cap " + std::to_string(limits.max_n));
}

ZPoly compose_affine(const ZPoly& p, const Int& a, const Int& b) {
  // p(a T + b) by Horner
  ZPoly r;
  const ZPoly lin{b, a};
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = poly_add(poly_mul(r, lin), ZPoly{*it});
  return r;
}

// The D4 action on exponent pairs generated by (i, j) -> (j, i) and (i, j) -> (-j, i).
std::vector<std::pair<std::int64_t, std::int64_t>> d4_orbit(std::int64_t i, std::int64_t j, std::int64_t n) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<std::pair<std::int64_t, std::int64_t>> stack{{i, j}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (!seen.insert({a, b}).second) continue;
    stack.push_back({b, a});
    stack.push_back({mod(-b, n), a});
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

LaurentPoly pt_poly(PtVariant variant) {
  if (variant == PtVariant::T) return LaurentPoly::parse("X1 + X1^-1 + X2 + X2^-1 + X3", 3);
  return LaurentPoly::parse("X1 + X1^-1 + X2 + X2^-1 + 2*X3 + 4", 3);
}

ZPoly pt_W(std::int64_t n, const PtLimits& limits) {
  check_n(n, limits);
  // X Y P_T = X^2 Y + Y + X Y^2 + X + T X Y; the monomial XY contributes
  // prod zeta^(-1,-1) = 1 over mu_n^2.
  std::vector<std::pair<std::vector<long>, Int>> terms{
      {{2, 1, 0}, 1}, {{0, 1, 0}, 1}, {{1, 2, 0}, 1}, {{1, 0, 0}, 1}, {{1, 1, 1}, 1}};
  RecPoly r = iterated_root_product(RecPoly::from_terms(3, terms), n, 2);
  ZPoly out;
  for (const auto& c : r.coeffs()) out.push_back(c.value());
  trim(out);
  ensure(degree(out) == n * n, "W_n(P_T) has degree n^2");
  return out;
}

ZPoly pt_W_shifted(std::int64_t n, const PtLimits& limits) { return compose_affine(pt_W(n, limits), 2, 4); }

PtOrbitCount pt_orbit_count(std::int64_t n) {
  if (n < 1) throw DomainError("n must be positive");
  PtOrbitCount c{n, 0, 0, 0, n % 2 ? n * n - 4 * n + 3 : n * n - 6 * n + 8};
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) {
      if (d4_orbit(i, j, n).size() == 8) ++c.free_points;
      else ++c.nonfree_points;
    }
  c.free_orbits = c.free_points / 8;
  ensure(c.free_points % 8 == 0, "free points split into orbits of size 8");
  return c;
}

PtEighthPower pt_eighth_power(std::int64_t n, const PtLimits& limits) {
  PtEighthPower out;
  out.w = pt_W(n, limits);
  out.expected_deg_b = static_cast<int>(n % 2 ? (n - 1) * (n - 3) / 8 : (n - 2) * (n - 4) / 8);
  // B = prod over free orbit representatives of (T + c), c = z1 + 1/z1 + z2 + 1/z2,
  // formed in Z[zeta_n][T] and descended to Z[T].
  std::vector<CyclotomicInt> b{CyclotomicInt(n, Int(1))};
  std::set<std::pair<std::int64_t, std::int64_t>> done;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) {
      if (done.count({i, j})) continue;
      auto orbit = d4_orbit(i, j, n);
      done.insert(orbit.begin(), orbit.end());
      if (orbit.size() != 8) continue;
      CyclotomicInt c = CyclotomicInt::root_power(n, i) + CyclotomicInt::root_power(n, -i) +
                        CyclotomicInt::root_power(n, j) + CyclotomicInt::root_power(n, -j);
      std::vector<CyclotomicInt> next(b.size() + 1, CyclotomicInt(n, Int(0)));
      for (std::size_t k = 0; k < b.size(); ++k) {
        next[k] = next[k] + b[k] * c;
        next[k + 1] = next[k + 1] + b[k];
      }
      b = std::move(next);
    }
  for (const auto& c : b) {
    auto v = c.as_integer();
    ensure(v.has_value(), "B_n descends to Z[T]");
    out.b.push_back(*v);
  }
  trim(out.b);
  auto q = exact_quotient(out.w, poly_pow(out.b, 8));
  out.b8_divides = q.has_value();
  if (q) out.a = *q;
  return out;
}

LaurentPoly pt_identity_difference() {
  // Variables of the result: (Z, T). Substitutions are monomial maps.
  LaurentPoly shifted = monomial_substitution(pt_poly(PtVariant::TwoTPlusFour), {{1, 0}, {1, 0}, {0, 1}});
  LaurentPoly base = monomial_substitution(pt_poly(PtVariant::T), {{0, 0}, {1, 0}, {0, 1}});
  LaurentPoly minus_two(2);
  minus_two.add_term({0, 0}, Int(-2));
  return shifted + minus_two * base;
}

PtGcd pt_gcd_check(std::int64_t n, const PtLimits& limits) {
  PtGcd out;
  ZPoly w = pt_W(n, limits);
  ZPoly ws = compose_affine(w, 2, 4);
  out.gcd = poly_gcd(w, ws);
  out.degree = degree(out.gcd);
  out.bound = static_cast<int>(n % 2 ? 2 * n - 1 : 2 * n - 2);
  out.identity_holds = pt_identity_difference().is_zero();
  return out;
}

PtFourthPower pt_fourth_power_check(std::int64_t n, const PtLimits& limits) {
  auto e = pt_eighth_power(n, limits);
  if (!e.b8_divides) return {FourthPowerStatus::NotDivisible, {}};
  ZPoly divisor = pt_W(n % 2 ? 1 : 2, limits);
  auto q = exact_quotient(e.a, divisor);
  if (!q) return {FourthPowerStatus::NotDivisible, {}};
  auto s = poly_sqrt(to_q(*q));
  if (!s) return {FourthPowerStatus::NotSquare, {}};
  auto r = poly_sqrt(*s);
  if (!r) return {FourthPowerStatus::NotFourthPower, {}};
  return {FourthPowerStatus::FourthPower, *r};
}

std::string to_string(FourthPowerStatus s) {
  switch (s) {
    case FourthPowerStatus::FourthPower: return "fourth-power";
    case FourthPowerStatus::NotDivisible: return "not-divisible";
    case FourthPowerStatus::NotSquare: return "not-square";
    case FourthPowerStatus::NotFourthPower: return "square-but-not-fourth-power";
  }
  return "unknown";
}

}  // namespace ddseq
