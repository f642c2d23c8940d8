#pragma once

#include <cstdint>
#include <vector>

#include "ddseq/laurent.hpp"

namespace ddseq {

/// The field with p^k elements as F_p[t]/(g), g monic irreducible of degree k.
class FieldExt {
 public:
  using Elt = std::vector<std::uint64_t>;  // k coefficients, low to high

  FieldExt(std::uint64_t p, int k);
  /// Smallest extension of F_p containing the e-th roots of unity (p not dividing e).
  static FieldExt for_roots_of_unity(std::uint64_t p, std::int64_t e);

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  const std::vector<std::uint64_t>& modulus() const { return g_; }

  Elt zero() const { return Elt(k_, 0); }
  Elt one() const;
  Elt from_int(const Int& v) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(Elt a, const Int& e) const;
  bool is_zero(const Elt& a) const;
  bool is_one(const Elt& a) const;
  /// An element of exact multiplicative order e, found deterministically.
  Elt root_of_unity(std::int64_t e) const;

 private:
  std::uint64_t p_;
  int k_;
  std::vector<std::uint64_t> g_;  // monic, degree k
};

/// Monic irreducible of degree k over F_p (first one in a fixed search order).
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int k);

/// W_f(group) mod p computed in F_{p^k}; requires p not dividing the exponent.
/// Exactly vanishing factors are detected per Galois orbit and skipped.
std::uint64_t W_mod_p(const LaurentPoly& f, const FiniteSubgroup& group, std::uint64_t p,
                      const Limits& limits = {});

}  // namespace ddseq
