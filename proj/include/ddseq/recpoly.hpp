#pragma once

#include <string>
#include <vector>

#include "ddseq/arith.hpp"
#include "ddseq/errors.hpp"

namespace ddseq {

/// Dense multivariate integer polynomial in recursive form.
///
/// Depth 0 is an integer. Depth d > 0 is a polynomial in one variable whose
/// coefficients are RecPolys of depth d-1 (low to high, no trailing zeros).
class RecPoly {
 public:
  explicit RecPoly(int depth = 0) : depth_(depth) {}
  static RecPoly constant(int depth, const Int& c);
  /// Builds from exponent-vector terms; exps[i][0] is the outermost variable.
  static RecPoly from_terms(int depth, const std::vector<std::pair<std::vector<long>, Int>>& terms);

  int depth() const { return depth_; }
  bool is_zero() const { return depth_ == 0 ? c_ == 0 : coef_.empty(); }
  const Int& value() const { return c_; }
  const std::vector<RecPoly>& coeffs() const { return coef_; }
  std::vector<RecPoly>& coeffs() { return coef_; }
  int degree() const { return depth_ == 0 ? (c_ == 0 ? -1 : 0) : static_cast<int>(coef_.size()) - 1; }
  void normalize();

  /// Folds exponents of the outer `levels` variables modulo n (x^n = 1).
  RecPoly reduce_cyclic(std::int64_t n, int levels) const;
  /// Evaluates all variables at integers (outermost first).
  Int eval(const std::vector<Int>& point) const;
  /// Total polynomial as exponent-vector terms (outermost first).
  std::vector<std::pair<std::vector<long>, Int>> terms() const;
  std::string str() const;

  friend RecPoly operator+(const RecPoly& a, const RecPoly& b);
  friend RecPoly operator-(const RecPoly& a, const RecPoly& b);
  friend RecPoly operator-(const RecPoly& a);
  friend RecPoly operator*(const RecPoly& a, const RecPoly& b);
  friend bool operator==(const RecPoly& a, const RecPoly& b);
  friend bool operator!=(const RecPoly& a, const RecPoly& b) { return !(a == b); }

 private:
  int depth_;
  Int c_ = 0;
  std::vector<RecPoly> coef_;
};

/// a / b, which must be exact; throws InvariantError otherwise.
RecPoly exact_div(const RecPoly& a, const RecPoly& b);
RecPoly pow(const RecPoly& a, unsigned e);

inline bool is_zero(const Int& x) { return x == 0; }
inline bool is_zero(const RecPoly& x) { return x.is_zero(); }
inline Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Int pow(const Int& a, unsigned e) { return ipow(a, e); }

}  // namespace ddseq
