#pragma once

#include <vector>

#include "ddseq/ddcore.hpp"

namespace ddseq {

struct ApparitionRecord {
  std::uint64_t p;
  FiniteSubgroup group;
  std::uint64_t order;
};

struct RaOptions {
  /// Also test non-cyclic subgroups (all of them should be rejected).
  bool include_noncyclic = false;
  /// Use F_{p^k} arithmetic when p does not divide the order.
  bool fast_path = true;
  Limits limits;
};

/// Ranks of apparition of p among subgroups of order <= bound, by increasing order.
std::vector<ApparitionRecord> ra_scan(const LaurentPoly& f, std::uint64_t p, std::int64_t order_bound,
                                      const RaOptions& options = {});

struct ZsigRecord {
  FiniteSubgroup group;
  TorsionPoint generator;
  Int w;
  FactoredProduct primitive_part;
  bool in_zsigmondy_set;
};

std::vector<ZsigRecord> zsig_scan(const LaurentPoly& f, std::int64_t order_bound, const Limits& limits = {});

/// Primitive part of w after removing every prime shared with some w_j.
Int primitive_part(const Int& w, const std::vector<Int>& smaller);

struct RomanoffReport {
  Int l1_norm;                  // sum |a_m|
  double sup_log_bound;         // log sum |a_m| >= C_f'
  std::int64_t x;
  std::uint64_t subgroup_count;
  Int weight;                   // sum_{n <= x} n nu_N(n)
  double log_abs_A;             // log |A_f(x)|
  double log_rhs;               // weight * log sum |a_m|
  bool inequality_holds;        // |A_f(x)| <= (sum |a_m|)^weight, checked exactly
  double epsilon;
  std::uint64_t p_bound;
  double romanoff_partial_sum;  // sum_p log p / p sum_{Lambda in RA(p), |Lambda| <= x} |Lambda|^-eps
  double main_term;             // (N + 1) / eps
  double empirical_constant;    // partial sum - main term
  double d_with_multiplicity;   // sum over (p, Lambda) records of log p / p
  double d_distinct_primes;     // sum over primes with some record of log p / p
  std::size_t record_count;
};

RomanoffReport romanoff_audit(const LaurentPoly& f, std::int64_t x, double epsilon, std::uint64_t p_bound,
                              const Limits& limits = {});

struct DensityReport {
  double theta;
  std::uint64_t p_bound;
  std::vector<std::uint64_t> primes;   // members of P_f(theta) up to p_bound
  double reciprocal_sum;               // sum over members of 1/p
  double all_primes_reciprocal_sum;    // sum over all p <= p_bound of 1/p
  double ratio;
  double bound;                        // (N + 1) theta
};

DensityReport density_report(const LaurentPoly& f, double theta, std::uint64_t p_bound, std::int64_t order_bound,
                             const Limits& limits = {});

}  // namespace ddseq
