#include "ddseq/scan.hpp"

#include <cmath>
#include <map>

#include "ddseq/finite_field.hpp"

namespace ddseq {

namespace {

bool p_divides_W(const LaurentPoly& f, const FiniteSubgroup& g, std::uint64_t p, const RaOptions& opt) {
  if (opt.fast_path && g.exponent() % static_cast<std::int64_t>(p) != 0)
    return W_mod_p(f, g, p, opt.limits) == 0;
  Int w = W(f, g, opt.limits);
  return mpz_divisible_ui_p(w.get_mpz_t(), p) != 0;
}

std::vector<FiniteSubgroup> maximal_of(const FiniteSubgroup& g, const Limits& limits) {
  return maximal_subgroups(g, limits);
}

}  // namespace

std::vector<ApparitionRecord> ra_scan(const LaurentPoly& f, std::uint64_t p, std::int64_t order_bound,
                                      const RaOptions& opt) {
  if (!is_prime64(static_cast<std::int64_t>(p))) throw DomainError("ra_scan: p must be prime");
  if (order_bound < 1) return {};
  const int N = f.arity();
  std::vector<FiniteSubgroup> groups;
  for (std::int64_t n = 1; n <= order_bound; ++n) {
    if (opt.include_noncyclic) {
      for (auto& g : subgroups_of_order(N, n, opt.limits)) groups.push_back(std::move(g));
    } else {
      for (auto& [g, xi] : cyclic_subgroups_of_order(N, n, opt.limits)) groups.push_back(std::move(g));
    }
  }
  std::map<FiniteSubgroup, std::size_t> index;
  for (std::size_t i = 0; i < groups.size(); ++i) index.emplace(groups[i], i);

  std::vector<char> divides(groups.size(), 0);
  const auto count = static_cast<std::int64_t>(groups.size());
  for (std::int64_t n = 1; n <= order_bound; ++n) (void)cyclotomic_poly(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) divides[i] = p_divides_W(f, groups[i], p, opt) ? 1 : 0;

  std::vector<ApparitionRecord> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!divides[i]) continue;
    bool minimal = true;
    for (const auto& sub : maximal_of(groups[i], opt.limits)) {
      auto it = index.find(sub);
      const bool d = it != index.end() ? divides[it->second] != 0 : p_divides_W(f, sub, p, opt);
      if (d) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    Int v = V(f, groups[i], opt.limits);
    ensure(mpz_divisible_ui_p(v.get_mpz_t(), p) != 0, "a rank of apparition for p has p | V");
    out.push_back(ApparitionRecord{p, groups[i], groups[i].order()});
  }
  return out;
}

Int primitive_part(const Int& w, const std::vector<Int>& smaller) {
  Int r = abs(w);
  for (const auto& s : smaller) {
    Int g = gcd(r, s);
    while (g > 1) {
      r /= g;
      g = gcd(r, g);
    }
  }
  return r;
}

std::vector<ZsigRecord> zsig_scan(const LaurentPoly& f, std::int64_t order_bound, const Limits& limits) {
  const int N = f.arity();
  std::vector<std::pair<FiniteSubgroup, TorsionPoint>> cyc;
  for (std::int64_t n = 1; n <= order_bound; ++n)
    for (auto& entry : cyclic_subgroups_of_order(N, n, limits)) cyc.push_back(std::move(entry));
  std::map<FiniteSubgroup, std::size_t> index;
  for (std::size_t i = 0; i < cyc.size(); ++i) index.emplace(cyc[i].first, i);

  std::vector<Int> v(cyc.size());
  const auto count = static_cast<std::int64_t>(cyc.size());
  for (std::int64_t n = 1; n <= order_bound; ++n) (void)cyclotomic_poly(n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    auto val = eval_at(f, cyc[i].second);
    v[i] = val.is_zero() ? Int(1) : norm(val);
  }
  // W(<xi>) = prod over d | n of V(<xi^(n/d)>)
  auto w_of = [&](const TorsionPoint& xi) {
    Int w = 1;
    for (auto d : divisors(xi.order())) w *= v[index.at(FiniteSubgroup::cyclic(xi.pow(xi.order() / d)))];
    return w;
  };
  std::vector<ZsigRecord> out;
  for (const auto& [g, xi] : cyc) {
    Int w = w_of(xi);
    std::vector<Int> below;
    for (auto q : prime_factors(xi.order())) below.push_back(w_of(xi.pow(q)));
    Int prim = primitive_part(w, below);
    out.push_back(ZsigRecord{g, xi, w, FactoredProduct::factor(prim), prim == 1});
  }
  return out;
}

RomanoffReport romanoff_audit(const LaurentPoly& f, std::int64_t x, double epsilon, std::uint64_t p_bound,
                              const Limits& limits) {
  if (epsilon <= 0) throw DomainError("romanoff_audit: epsilon must be positive");
  const int N = f.arity();
  RomanoffReport r{};
  r.l1_norm = f.l1_norm();
  r.sup_log_bound = std::log(r.l1_norm.get_d());
  r.x = x;
  r.weight = 0;
  Int a = 1;
  for (std::int64_t n = 1; n <= x; ++n) {
    r.weight += Int(static_cast<unsigned long>(n)) * Int(static_cast<unsigned long>(nu(N, static_cast<std::uint64_t>(n))));
    for (const auto& g : subgroups_of_order(N, n, limits)) {
      a *= abs(W(f, g, limits));
      ++r.subgroup_count;
    }
  }
  r.log_abs_A = log_abs(a);
  r.log_rhs = r.weight.get_d() * r.sup_log_bound;
  if (!r.weight.fits_ulong_p()) throw ResourceCapError("romanoff_audit: weight too large");
  r.inequality_holds = a <= ipow(r.l1_norm, r.weight.get_ui());

  r.epsilon = epsilon;
  r.p_bound = p_bound;
  r.main_term = (N + 1) / epsilon;
  for (auto p : primes_up_to(static_cast<std::int64_t>(p_bound))) {
    const double w = std::log(static_cast<double>(p)) / static_cast<double>(p);
    auto recs = ra_scan(f, static_cast<std::uint64_t>(p), x, RaOptions{false, true, limits});
    for (const auto& rec : recs) r.romanoff_partial_sum += w * std::pow(static_cast<double>(rec.order), -epsilon);
    r.d_with_multiplicity += w * static_cast<double>(recs.size());
    if (!recs.empty()) r.d_distinct_primes += w;
    r.record_count += recs.size();
  }
  r.empirical_constant = r.romanoff_partial_sum - r.main_term;
  return r;
}

DensityReport density_report(const LaurentPoly& f, double theta, std::uint64_t p_bound, std::int64_t order_bound,
                             const Limits& limits) {
  if (theta < 0) throw DomainError("density_report: theta must be non-negative");
  DensityReport r{};
  r.theta = theta;
  r.p_bound = p_bound;
  r.bound = (f.arity() + 1) * theta;
  for (auto p : primes_up_to(static_cast<std::int64_t>(p_bound))) {
    const double inv = 1.0 / static_cast<double>(p);
    r.all_primes_reciprocal_sum += inv;
    const auto cap = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(p), theta) + 1e-9));
    const std::int64_t bound = std::min(order_bound, cap);
    if (bound < 1) continue;
    if (!ra_scan(f, static_cast<std::uint64_t>(p), bound, RaOptions{false, true, limits}).empty()) {
      r.primes.push_back(static_cast<std::uint64_t>(p));
      r.reciprocal_sum += inv;
    }
  }
  r.ratio = r.all_primes_reciprocal_sum > 0 ? r.reciprocal_sum / r.all_primes_reciprocal_sum : 0.0;
  return r;
}

}  // namespace ddseq
