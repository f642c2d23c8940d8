#pragma once

#include <vector>

#include "ddseq/cyclo.hpp"
#include "ddseq/factored.hpp"
#include "ddseq/recpoly.hpp"

namespace ddseq {

/// W_f(group): product of f over the group, vanishing factors omitted.
/// Full groups mu_n^N go through iterated resultants, others through orbit norms.
Int W(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits = {});
/// Orbit-norm route: one norm per cyclic subgroup.
Int W_direct(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits = {});
/// W_f(mu_n^N); falls back to W_direct when some factor vanishes.
Int W_n(const LaurentPoly& f, std::int64_t n, const Limits& limits = {});
/// Raw iterated resultant for mu_n^N, 0 when any factor vanishes.
Int W_n_resultant(const LaurentPoly& f, std::int64_t n);

/// prod over x_1..x_peel in mu_n of p, for p with non-negative exponents in
/// recursive form (x_1 outermost). Remaining inner variables are kept.
RecPoly iterated_root_product(const RecPoly& p, std::int64_t n, int peel);

/// Product of f over the generators of a cyclic group (1 if not cyclic).
Int V(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits = {});
/// prod_{sub} W(sub)^mu(sub, group).
Int V_mobius(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits = {});

struct Stabilizer {
  std::int64_t d = 1;       // order of the group generated by xi^m, m in M
  std::uint64_t size = 1;   // |{k unit mod n : k = 1 mod d}|
};
Stabilizer stabilizer_index(const TorsionPoint& xi, const std::vector<ExpVec>& support);

/// Smallest lifts to units mod n of the units mod d (d | n): one element
/// per coset of {k : k = 1 mod d}.
std::vector<std::int64_t> galois_coset_reps(std::int64_t n, std::int64_t d);

/// Product of the conjugates of f(xi) over Gal(Q(xi^M)/Q); 0 iff f(xi) = 0.
Int C(const LaurentPoly& f, const TorsionPoint& xi);

struct CFactor {
  FiniteSubgroup subgroup;
  TorsionPoint rep;
  Int c;
  std::uint64_t s_size;
  bool vanishing;
};
/// One factor per cyclic subgroup; prod C^|S| over non-vanishing rows is W.
std::vector<CFactor> factor_W(const LaurentPoly& f, const FiniteSubgroup& group, const Limits& limits = {});

bool divides_check(const LaurentPoly& f, const FiniteSubgroup& sub, const FiniteSubgroup& group,
                   const Limits& limits = {});

struct StrongDivResult {
  bool holds;
  FactoredProduct gcd;
  FactoredProduct w_meet;
  Int w1, w2;
  FiniteSubgroup meet;
};
StrongDivResult strong_div_check(const LaurentPoly& f, const FiniteSubgroup& a, const FiniteSubgroup& b,
                                 const Limits& limits = {});

}  // namespace ddseq
