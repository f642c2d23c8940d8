#include "ddseq/symbolic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ddseq {

// ------------------------------------------------------------------ SymPoly

SymPoly::SymPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

SymPoly SymPoly::constant(std::vector<std::string> vars, const Rat& c) {
  SymPoly p(std::move(vars));
  p.add_term(Mono(p.vars_.size(), 0), c);
  return p;
}

SymPoly SymPoly::variable(std::vector<std::string> vars, std::size_t index) {
  SymPoly p(std::move(vars));
  if (index >= p.vars_.size()) throw DomainError("SymPoly::variable: index out of range");
  Mono m(p.vars_.size(), 0);
  m[index] = 1;
  p.add_term(m, Rat(1));
  return p;
}

void SymPoly::add_term(const Mono& m, const Rat& c) {
  if (m.size() != vars_.size()) throw DomainError("SymPoly: monomial length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int SymPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

bool SymPoly::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Rat SymPoly::eval(const std::vector<Rat>& values) const {
  if (values.size() != vars_.size()) throw DomainError("SymPoly::eval: wrong number of values");
  Rat acc = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) t *= values[i];
    acc += t;
  }
  return acc;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    const bool neg = c < 0;
    Rat mag = abs(c);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (mono.empty()) os << mag.get_str();
    else if (mag == 1) os << mono;
    else os << mag.get_str() << "*" << mono;
    first = false;
  }
  return os.str();
}

namespace {

void check_vars(const SymPoly& a, const SymPoly& b) {
  if (a.vars() != b.vars()) throw DomainError("SymPoly: variable lists differ");
}

}  // namespace

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  check_vars(a, b);
  SymPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
  check_vars(a, b);
  SymPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  check_vars(a, b);
  SymPoly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      SymPoly::Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

SymPoly pow(const SymPoly& a, unsigned e) {
  SymPoly r = SymPoly::constant(a.vars(), Rat(1)), base = a;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

// ---------------------------------------------------------- generic products

std::vector<ExpVec> normalize_support(std::vector<ExpVec> support) {
  if (support.empty()) throw DomainError("support must be non-empty");
  for (const auto& m : support)
    if (m.size() != support[0].size() || m.empty()) throw DomainError("support vectors differ in length");
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

std::vector<std::string> coefficient_names(const std::vector<ExpVec>& support) {
  std::vector<std::string> out;
  for (const auto& m : support) {
    std::string s = "a(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    out.push_back(s + ")");
  }
  return out;
}

namespace {

// Polynomial in the a_m with coefficients in Z[x]/Phi_n.
class CycSym {
 public:
  CycSym(std::int64_t conductor, std::size_t nvars) : n_(conductor), nvars_(nvars) {
    terms_.emplace(SymPoly::Mono(nvars, 0), CyclotomicInt(conductor, Int(1)));
  }

  // Multiplies by sum_i x^{exps[i]} a_i.
  void mul_linear(const std::vector<std::int64_t>& exps) {
    std::map<SymPoly::Mono, CyclotomicInt> next;
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) {
        SymPoly::Mono mm = m;
        ++mm[i];
        CyclotomicInt t = c * CyclotomicInt::root_power(n_, exps[i]);
        auto it = next.find(mm);
        if (it == next.end()) next.emplace(mm, t);
        else it->second = it->second + t;
      }
    }
    terms_ = std::move(next);
  }

  SymPoly descend(const std::vector<std::string>& names) const {
    SymPoly p(names);
    for (const auto& [m, c] : terms_) {
      auto v = c.as_integer();
      ensure(v.has_value(), "Galois-stable product has rational coefficients");
      p.add_term(m, Rat(*v));
    }
    return p;
  }

 private:
  std::int64_t n_;
  std::size_t nvars_;
  std::map<SymPoly::Mono, CyclotomicInt> terms_;
};

std::vector<std::int64_t> pairing(const std::vector<ExpVec>& support, const ExpVec& v, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& m : support) {
    if (m.size() != v.size()) throw DomainError("support and point have different arity");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s = mod(s + mod(m[i], n) * v[i], n);
    out.push_back(s);
  }
  return out;
}

}  // namespace

SymPoly generic_C(const std::vector<ExpVec>& support0, const TorsionPoint& xi, bool* warning) {
  const auto support = normalize_support(support0);
  if (warning) *warning = !std::binary_search(support.begin(), support.end(), ExpVec(xi.arity(), 0));
  const std::int64_t n = xi.order();
  const auto st = stabilizer_index(xi, support);
  const auto base = pairing(support, xi.exponents(), n);
  CycSym acc(n, support.size());
  for (auto k : galois_coset_reps(n, st.d)) {
    std::vector<std::int64_t> e;
    for (auto b : base) e.push_back(mod(b * k, n));
    acc.mul_linear(e);
  }
  return acc.descend(coefficient_names(support));
}

SymPoly generic_V(const std::vector<ExpVec>& support0, const FiniteSubgroup& group) {
  const auto support = normalize_support(support0);
  if (!group.is_cyclic()) return SymPoly::constant(coefficient_names(support), Rat(1));
  const auto xi = a_generator(group);
  const auto st = stabilizer_index(xi, support);
  return pow(generic_C(support, xi), static_cast<unsigned>(st.size));
}

SymPoly generic_W(const std::vector<ExpVec>& support0, const FiniteSubgroup& group, const Limits& limits) {
  const auto support = normalize_support(support0);
  const std::int64_t e = group.exponent();
  CycSym acc(e, support.size());
  for (const auto& v : element_vectors(group, limits)) acc.mul_linear(pairing(support, v, e));
  return acc.descend(coefficient_names(support));
}

std::vector<OrbitFactor> generic_factorization(const std::vector<ExpVec>& support0, const FiniteSubgroup& group,
                                               const Limits& limits) {
  const auto support = normalize_support(support0);
  std::vector<OrbitFactor> out;
  for (const auto& [sub, xi] : cyclic_subgroups_of(group, limits))
    out.push_back(OrbitFactor{sub, xi, generic_C(support, xi), stabilizer_index(xi, support).size});
  return out;
}

// ------------------------------------------------------------ linear forms

NormalForm linear_form(const std::vector<ExpVec>& support0, const TorsionPoint& xi) {
  const auto support = normalize_support(support0);
  const std::int64_t n = xi.order();
  const auto e = pairing(support, xi.exponents(), n);
  NormalForm out;
  for (auto x : e) {
    Rat r(Int(static_cast<long>(mod(x - e[0], n))), Int(static_cast<long>(n)));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

CoprimalityResult coprimality_check(const std::vector<ExpVec>& support, const FiniteSubgroup& a,
                                    const FiniteSubgroup& b) {
  if (a == b) return {false, "subgroups are equal; V(a) and V(b) coincide"};
  if (!a.is_cyclic() || !b.is_cyclic()) return {true, "a non-cyclic group has V = 1"};
  std::set<NormalForm> forms;
  for (const auto& xi : generators(a)) forms.insert(linear_form(support, xi));
  for (const auto& xi : generators(b))
    if (forms.count(linear_form(support, xi))) return {false, ""};
  return {true, ""};
}

bool strong_div_symbolic(const std::vector<ExpVec>& support0, const FiniteSubgroup& a, const FiniteSubgroup& b,
                         const Limits& limits) {
  const auto support = normalize_support(support0);
  if (support.size() < 2) throw DomainError("strong_div_symbolic: f_M must not be a monomial");
  std::set<FiniteSubgroup> ca, cb, cm;
  for (auto& [g, xi] : cyclic_subgroups_of(a, limits)) ca.insert(g);
  for (auto& [g, xi] : cyclic_subgroups_of(b, limits)) cb.insert(g);
  for (auto& [g, xi] : cyclic_subgroups_of(intersection(a, b), limits)) cm.insert(g);
  std::set<FiniteSubgroup> shared;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::inserter(shared, shared.end()));
  if (shared != cm) return false;
  for (const auto& x : ca) {
    if (shared.count(x)) continue;
    for (const auto& y : cb) {
      if (shared.count(y)) continue;
      if (!coprimality_check(support, x, y).coprime) return false;
    }
  }
  return true;
}

}  // namespace ddseq
