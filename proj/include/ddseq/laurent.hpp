#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ddseq/arith.hpp"
#include "ddseq/lattice.hpp"

namespace ddseq {

/// Integer Laurent polynomial in X1..XN: exponent vector -> coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<ExpVec, Int>;

  explicit LaurentPoly(int arity = 1);
  LaurentPoly(int arity, const Terms& terms);
  /// Parses e.g. "X1 + X1^-1 + X2 + X2^-1 + 5". Arity 0 infers the largest
  /// variable index used (at least 1).
  static LaurentPoly parse(std::string_view text, int arity = 0);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Exponent vectors with non-zero coefficient.
  std::vector<ExpVec> support() const;
  /// Componentwise minimum exponent (clipped at 0 from above).
  ExpVec min_exponents() const;
  /// Sum of |coefficients|.
  Int l1_norm() const;
  Int value_at_one() const;
  /// Single-variable view x^shift * p(x); requires arity 1.
  std::pair<std::vector<Int>, std::int64_t> to_univariate() const;

  /// Canonical text: terms in descending lexicographic exponent order.
  std::string str() const;

  void add_term(const ExpVec& e, const Int& c);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  int arity_;
  Terms terms_;
};

/// Substitutes X_i -> prod_j Y_j^images[i][j]; the result has arity images[i].size().
LaurentPoly monomial_substitution(const LaurentPoly& f, const std::vector<ExpVec>& images);

/// 64-bit FNV-1a of a string (cache keys).
std::uint64_t fnv1a64(std::string_view s);

}  // namespace ddseq
