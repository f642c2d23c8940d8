#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace ddseq {

using Int = mpz_class;
using Rat = mpq_class;

// Small-integer helpers shared by the lattice and cyclotomic code.

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);  // distinct, ascending
std::vector<std::int64_t> units_mod(std::int64_t n);      // ascending, {0} for n == 1
std::vector<std::int64_t> primes_up_to(std::int64_t n);
bool is_prime64(std::int64_t n);
// Least k >= 1 with base^k == 1 mod n; requires gcd(base, n) == 1.
std::int64_t multiplicative_order(std::int64_t base, std::int64_t n);
std::int64_t powmod64(std::int64_t base, std::uint64_t e, std::int64_t m);

// Natural log of |x| for big integers without overflowing doubles.
double log_abs(const Int& x);

Int ipow(const Int& base, unsigned long e);

}  // namespace ddseq
