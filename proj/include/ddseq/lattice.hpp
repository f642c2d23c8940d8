#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddseq/arith.hpp"
#include "ddseq/errors.hpp"

namespace ddseq {

using ExpVec = std::vector<std::int64_t>;

/// A torsion point of the N-torus, stored as (m, a) meaning
/// (w^a_1, ..., w^a_N) with w = exp(2 pi i / m).
///
/// The stored modulus is always the exact order of the point, so equal
/// points have equal representations.
class TorsionPoint {
 public:
  TorsionPoint(std::int64_t modulus, ExpVec exponents);

  static TorsionPoint identity(int arity);

  int arity() const { return static_cast<int>(a_.size()); }
  std::int64_t order() const { return m_; }
  const ExpVec& exponents() const { return a_; }

  TorsionPoint pow(std::int64_t k) const;
  std::string str() const;

  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
  friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;

 private:
  std::int64_t m_;
  ExpVec a_;
};

/// A finite subgroup of mu_infinity^N.
///
/// Stored at its exponent e as the row Hermite normal form of the lattice
/// L = <generators> + e Z^N: upper triangular, positive pivots d_i | e,
/// entries above each pivot reduced into [0, d_i). Two subgroups are equal
/// exactly when their (exponent, matrix) pairs are equal.
class FiniteSubgroup {
 public:
  static FiniteSubgroup canonicalize(int arity, std::int64_t modulus,
                                     const std::vector<ExpVec>& gens);
  static FiniteSubgroup full(int arity, std::int64_t n);
  static FiniteSubgroup trivial(int arity);
  static FiniteSubgroup cyclic(const TorsionPoint& xi);
  /// Parses "N=<n>;m=<mod>;gens=(a1,...,aN)(b1,...,bN)...".
  static FiniteSubgroup parse(std::string_view literal);

  int arity() const { return arity_; }
  std::int64_t exponent() const { return exponent_; }
  std::uint64_t order() const { return order_; }
  const std::vector<ExpVec>& hnf() const { return hnf_; }

  /// Rows of the canonical matrix that are non-zero modulo the exponent.
  std::vector<ExpVec> generator_rows() const;
  bool is_cyclic() const { return static_cast<std::uint64_t>(exponent_) == order_; }
  bool is_full() const;
  std::string serialize() const;

  friend bool operator==(const FiniteSubgroup& a, const FiniteSubgroup& b) {
    return a.exponent_ == b.exponent_ && a.hnf_ == b.hnf_;
  }
  // Deterministic listing order: by order, then exponent, then matrix.
  friend std::strong_ordering operator<=>(const FiniteSubgroup& a, const FiniteSubgroup& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    if (auto c = a.exponent_ <=> b.exponent_; c != 0) return c;
    return a.hnf_ <=> b.hnf_;
  }

 private:
  FiniteSubgroup() = default;
  int arity_ = 0;
  std::int64_t exponent_ = 1;
  std::vector<ExpVec> hnf_;
  std::uint64_t order_ = 1;
};

/// Elementary divisors of an integer matrix (zero divisors dropped).
std::vector<Int> smith_invariants(std::vector<std::vector<Int>> rows);

/// Order of the subgroup from the Smith form of [G | eI].
std::uint64_t smith_order(const FiniteSubgroup& group);

/// Element exponent vectors modulo the group exponent, in mixed-radix order.
std::vector<ExpVec> element_vectors(const FiniteSubgroup& group, const Limits& limits = {});
std::vector<TorsionPoint> elements(const FiniteSubgroup& group, const Limits& limits = {});

bool contains(const FiniteSubgroup& big, const FiniteSubgroup& small);
FiniteSubgroup intersection(const FiniteSubgroup& a, const FiniteSubgroup& b);
FiniteSubgroup join(const FiniteSubgroup& a, const FiniteSubgroup& b);
bool contains_point(const FiniteSubgroup& group, const TorsionPoint& xi);

/// Number of subgroups of order n, via nu_N = (d -> d^(N-1)) * nu_(N-1).
std::uint64_t nu(int arity, std::uint64_t n);

/// All subgroups of order n, through index-n sublattices of Z^N and duality.
std::vector<FiniteSubgroup> subgroups_of_order(int arity, std::int64_t n,
                                               const Limits& limits = {});
/// Cyclic subgroups of order n with one generator each.
std::vector<std::pair<FiniteSubgroup, TorsionPoint>> cyclic_subgroups_of_order(
    int arity, std::int64_t n, const Limits& limits = {});

/// Every subgroup of the group, built as joins of its cyclic subgroups.
std::vector<FiniteSubgroup> subgroups_of(const FiniteSubgroup& group, const Limits& limits = {});
/// Cyclic subgroups of the group with a generator for each, in canonical order.
std::vector<std::pair<FiniteSubgroup, TorsionPoint>> cyclic_subgroups_of(
    const FiniteSubgroup& group, const Limits& limits = {});
/// Maximal proper subgroups (all have prime index).
std::vector<FiniteSubgroup> maximal_subgroups(const FiniteSubgroup& group,
                                              const Limits& limits = {});

TorsionPoint a_generator(const FiniteSubgroup& group);
/// All phi(e) generators of a cyclic group; throws DomainError otherwise.
std::vector<TorsionPoint> generators(const FiniteSubgroup& group);

/// Moebius function of the subgroup poset, mu(lower, upper).
int mobius(const FiniteSubgroup& lower, const FiniteSubgroup& upper, const Limits& limits = {});
/// mu(sub, upper) for every subgroup sub of upper, in canonical order.
std::vector<std::pair<FiniteSubgroup, int>> mobius_below(const FiniteSubgroup& upper,
                                                         const Limits& limits = {});

}  // namespace ddseq
