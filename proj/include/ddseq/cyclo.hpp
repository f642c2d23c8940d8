#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddseq/laurent.hpp"
#include "ddseq/poly.hpp"

namespace ddseq {

/// Phi_m with integer coefficients (cached, thread-safe).
const ZPoly& cyclotomic_poly(std::int64_t m);

/// Element of Z[x]/(Phi_m(x)), stored as phi(m) coefficients.
class CyclotomicInt {
 public:
  CyclotomicInt(std::int64_t conductor, const Int& value);
  /// Reduces an arbitrary integer polynomial modulo Phi_m.
  static CyclotomicInt from_poly(std::int64_t conductor, const ZPoly& p);
  /// x^j for any integer j.
  static CyclotomicInt root_power(std::int64_t conductor, std::int64_t j);

  std::int64_t conductor() const { return m_; }
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const;
  std::optional<Int> as_integer() const;
  std::string str() const;

  friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator-(const CyclotomicInt& a);
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) = default;

 private:
  CyclotomicInt() = default;
  std::int64_t m_ = 1;
  std::vector<Int> c_;
};

/// x -> x^k; k must be a unit modulo the conductor.
CyclotomicInt galois_apply(std::int64_t k, const CyclotomicInt& a);
/// Product of all Galois conjugates; lands in Z.
Int norm(const CyclotomicInt& a);
/// The same norm as Res(Phi_m, a).
Int norm_resultant(const CyclotomicInt& a);

/// f(xi) in conductor ord(xi).
CyclotomicInt eval_at(const LaurentPoly& f, const TorsionPoint& xi);
/// Sum_m a_m x^{<m, v>} reduced in conductor `conductor`, for any v.
CyclotomicInt eval_at_vector(const LaurentPoly& f, std::int64_t conductor, const ExpVec& v);

/// prod_{zeta^n = 1} x^shift * g(zeta), optionally skipping vanishing factors.
Int product_over_roots(const ZPoly& g, std::int64_t shift, std::int64_t n, bool skip_zeros);

}  // namespace ddseq
