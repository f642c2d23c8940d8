#pragma once

#include <map>
#include <string>
#include <vector>

#include "ddseq/ddcore.hpp"

namespace ddseq {

/// Polynomial with rational coefficients in named indeterminates.
class SymPoly {
 public:
  using Mono = std::vector<int>;

  explicit SymPoly(std::vector<std::string> vars = {});
  static SymPoly constant(std::vector<std::string> vars, const Rat& c);
  static SymPoly variable(std::vector<std::string> vars, std::size_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  bool has_integer_coefficients() const;
  Rat eval(const std::vector<Rat>& values) const;
  void add_term(const Mono& m, const Rat& c);
  std::string str() const;

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b) = default;

 private:
  std::vector<std::string> vars_;
  std::map<Mono, Rat> terms_;
};

SymPoly pow(const SymPoly& a, unsigned e);

/// Variable names a(m1,...,mN) for the sorted support.
std::vector<std::string> coefficient_names(const std::vector<ExpVec>& support);
/// Sorted, deduplicated copy of a support; rejects mixed arities.
std::vector<ExpVec> normalize_support(std::vector<ExpVec> support);

/// f_M(xi) conjugates multiplied over Gal(Q(xi^M)/Q); integral by construction.
/// Sets *warning when 0 is not in M (the product may then be reducible).
SymPoly generic_C(const std::vector<ExpVec>& support, const TorsionPoint& xi, bool* warning = nullptr);
/// generic_C(M, xi)^|S| for a generator; 1 for non-cyclic groups.
SymPoly generic_V(const std::vector<ExpVec>& support, const FiniteSubgroup& group);
/// prod over all elements of f_M(zeta), expanded directly.
SymPoly generic_W(const std::vector<ExpVec>& support, const FiniteSubgroup& group, const Limits& limits = {});

struct OrbitFactor {
  FiniteSubgroup subgroup;
  TorsionPoint rep;
  SymPoly c;
  std::uint64_t s_size;
};
std::vector<OrbitFactor> generic_factorization(const std::vector<ExpVec>& support, const FiniteSubgroup& group,
                                               const Limits& limits = {});

/// Linear form f_M(xi) up to a root-of-unity scalar: the exponents of its
/// coefficients in Q/Z, shifted so the first is 0, over the common modulus.
using NormalForm = std::vector<Rat>;
NormalForm linear_form(const std::vector<ExpVec>& support, const TorsionPoint& xi);

struct CoprimalityResult {
  bool coprime;
  std::string note;  // non-empty when a precondition failed
};
/// gcd(V(a), V(b)) = 1 decided by comparing linear forms.
CoprimalityResult coprimality_check(const std::vector<ExpVec>& support, const FiniteSubgroup& a,
                                    const FiniteSubgroup& b);

/// gcd(W(a), W(b)) = W(a meet b) for the generic f_M, checked at the factor level.
bool strong_div_symbolic(const std::vector<ExpVec>& support, const FiniteSubgroup& a, const FiniteSubgroup& b,
                         const Limits& limits = {});

}  // namespace ddseq
