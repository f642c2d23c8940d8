#include "ddseq/kernels.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace ddseq {

namespace {

Int orbit_norm(const LaurentPoly& f, const TorsionPoint& xi) {
  auto v = eval_at(f, xi);
  return v.is_zero() ? Int(0) : norm(v);
}

constexpr double kNearZero = 1e-12;

double log_abs_at(const NumericPoly& f, std::uint64_t idx, std::uint64_t k, double offset, bool* tiny) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(k);
  std::vector<double> theta(f.arity);
  for (int i = f.arity - 1; i >= 0; --i) {
    theta[i] = step * (static_cast<double>(idx % k) + offset);
    idx /= k;
  }
  std::complex<double> acc = 0.0;
  for (std::size_t t = 0; t < f.coeffs.size(); ++t) {
    double phase = 0.0;
    for (int i = 0; i < f.arity; ++i) phase += f.exps[t][i] * theta[i];
    acc += f.coeffs[t] * std::polar(1.0, phase);
  }
  const double a = std::abs(acc);
  *tiny = a < kNearZero;
  return std::log(a);
}

double node_value(const NumericPoly& f, std::uint64_t idx, std::uint64_t k, std::uint64_t* shifted) {
  bool tiny = false;
  double v = log_abs_at(f, idx, k, 0.0, &tiny);
  if (!tiny) return v;
  ++*shifted;
  return log_abs_at(f, idx, k, 0.5, &tiny);
}

std::uint64_t grid_size(const NumericPoly& f, std::uint64_t k) {
  std::uint64_t total = 1;
  for (int i = 0; i < f.arity; ++i) total *= k;
  return total;
}

}  // namespace

std::vector<Int> orbit_norms_serial(const LaurentPoly& f, const std::vector<TorsionPoint>& reps) {
  std::vector<Int> out(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) out[i] = orbit_norm(f, reps[i]);
  return out;
}

std::vector<Int> orbit_norms_omp(const LaurentPoly& f, const std::vector<TorsionPoint>& reps) {
  std::vector<Int> out(reps.size());
  const auto n = static_cast<std::int64_t>(reps.size());
  for (const auto& xi : reps) (void)cyclotomic_poly(xi.order());  // warm the cache serially
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) out[i] = orbit_norm(f, reps[i]);
  return out;
}

NumericPoly NumericPoly::from(const LaurentPoly& f) {
  NumericPoly p;
  p.arity = f.arity();
  for (const auto& [e, c] : f.terms()) {
    p.coeffs.push_back(c.get_d());
    p.exps.emplace_back(e.begin(), e.end());
  }
  return p;
}

GridSum torus_log_sum_serial(const NumericPoly& f, std::uint64_t k) {
  GridSum g;
  g.nodes = grid_size(f, k);
  for (std::uint64_t idx = 0; idx < g.nodes; ++idx) g.sum += node_value(f, idx, k, &g.shifted);
  return g;
}

GridSum torus_log_sum_omp(const NumericPoly& f, std::uint64_t k) {
  GridSum g;
  g.nodes = grid_size(f, k);
  const auto total = static_cast<std::int64_t>(g.nodes);
  double sum = 0.0;
  std::uint64_t shifted = 0;
#pragma omp parallel for reduction(+ : sum, shifted) schedule(static)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::uint64_t local = 0;
    sum += node_value(f, static_cast<std::uint64_t>(idx), k, &local);
    shifted += local;
  }
  g.sum = sum;
  g.shifted = shifted;
  return g;
}

}  // namespace ddseq
