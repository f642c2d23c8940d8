#pragma once

#include <string>

#include "ddseq/symbolic.hpp"

namespace ddseq {

// The family P_T(X, Y) = X + 1/X + Y + 1/Y + T with T an indeterminate.

struct PtLimits {
  std::int64_t max_n = 8;
};

enum class PtVariant { T, TwoTPlusFour };

/// P_T (or P_{2T+4}) as a Laurent polynomial in X1, X2, X3 with X3 = T.
LaurentPoly pt_poly(PtVariant variant);

/// W_n(P_T) in Z[T], degree n^2, by iterated resultants over Z[T].
ZPoly pt_W(std::int64_t n, const PtLimits& limits = {});
/// W_n(P_{2T+4})(T) = W_n(P_T)(2T + 4).
ZPoly pt_W_shifted(std::int64_t n, const PtLimits& limits = {});

struct PtOrbitCount {
  std::int64_t n;
  std::int64_t free_points;     // points of mu_n^2 with trivial D4 stabilizer
  std::int64_t free_orbits;     // free_points / 8
  std::int64_t nonfree_points;
  std::int64_t formula;         // n^2 - 4n + 3 (odd n) or n^2 - 6n + 8 (even n)
};
PtOrbitCount pt_orbit_count(std::int64_t n);

struct PtEighthPower {
  ZPoly w, a, b;          // W = A * B^8
  bool b8_divides;
  int expected_deg_b;     // (n-1)(n-3)/8 or (n-2)(n-4)/8
};
PtEighthPower pt_eighth_power(std::int64_t n, const PtLimits& limits = {});

struct PtGcd {
  ZPoly gcd;
  int degree;
  int bound;              // 2n - 1 (odd) or 2n - 2 (even)
  bool identity_holds;    // P_{2T+4}(Z, Z) = 2 P_T(1, Z)
};
PtGcd pt_gcd_check(std::int64_t n, const PtLimits& limits = {});

/// P_{2T+4}(Z, Z) - 2 P_T(1, Z) as a Laurent polynomial in (Z, T).
LaurentPoly pt_identity_difference();

enum class FourthPowerStatus { FourthPower, NotDivisible, NotSquare, NotFourthPower };
struct PtFourthPower {
  FourthPowerStatus status;
  QPoly root;  // fourth root when status is FourthPower
};
/// A_n / W_1 (odd n) or A_n / W_2 (even n) is a perfect fourth power in Q[T].
PtFourthPower pt_fourth_power_check(std::int64_t n, const PtLimits& limits = {});

std::string to_string(FourthPowerStatus s);

}  // namespace ddseq
