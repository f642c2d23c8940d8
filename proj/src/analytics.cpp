#include "ddseq/analytics.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "ddseq/kernels.hpp"

namespace ddseq {

namespace {

std::uint64_t default_base(int arity) {
  switch (arity) {
    case 1: return 4096;
    case 2: return 256;
    default: return 32;
  }
}

double grid_mean(const NumericPoly& p, std::uint64_t k, bool parallel, std::uint64_t* shifted) {
  GridSum g = parallel ? torus_log_sum_omp(p, k) : torus_log_sum_serial(p, k);
  if (shifted) *shifted = g.shifted;
  return g.sum / static_cast<double>(g.nodes);
}

MahlerEstimate monte_carlo(const NumericPoly& p, int level, const MahlerOptions& opt) {
  const std::uint64_t samples = std::uint64_t{1} << (14 + level);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double sum = 0.0, sq = 0.0;
  std::vector<double> theta(p.arity);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& t : theta) t = angle(rng);
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < p.coeffs.size(); ++t) {
      double phase = 0.0;
      for (int i = 0; i < p.arity; ++i) phase += p.exps[t][i] * theta[i];
      acc += p.coeffs[t] * std::polar(1.0, phase);
    }
    const double v = std::log(std::max(std::abs(acc), 1e-300));
    sum += v;
    sq += v * v;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double stderr_ = std::sqrt(std::max(0.0, sq / n - mean * mean) / n);
  MahlerEstimate est;
  est.value = std::exp(mean);
  est.nodes = samples;
  est.error_indicator = est.value * stderr_;
  est.converged = est.error_indicator <= opt.tolerance;
  return est;
}

}  // namespace

double mahler_roots(const LaurentPoly& f) {
  auto [p, shift] = f.to_univariate();
  (void)shift;
  trim(p);
  if (p.empty()) throw DomainError("mahler: f is zero");
  const int d = degree(p);
  const double lead = std::abs(p.back().get_d());
  if (d == 0) return lead;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p[i].get_d() / p.back().get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  double m = lead;
  for (int i = 0; i < d; ++i) m *= std::max(1.0, std::abs(solver.eigenvalues()[i]));
  return m;
}

MahlerEstimate mahler(const LaurentPoly& f, int level, const MahlerOptions& opt) {
  if (f.is_zero()) throw DomainError("mahler: f is zero");
  if (level < 0) throw DomainError("mahler: refinement level must be non-negative");
  const NumericPoly p = NumericPoly::from(f);
  MahlerEstimate est;
  if (f.arity() >= 4) {
    est = monte_carlo(p, level, opt);
  } else {
    const std::uint64_t k = (opt.base_nodes ? opt.base_nodes : default_base(f.arity())) << level;
    std::uint64_t shifted = 0;
    const double fine = std::exp(grid_mean(p, k, opt.parallel, &shifted));
    const double coarse = std::exp(grid_mean(p, k / 2, opt.parallel, nullptr));
    est.value = fine;
    est.nodes = 1;
    for (int i = 0; i < f.arity(); ++i) est.nodes *= k;
    est.shifted_nodes = shifted;
    est.error_indicator = std::abs(fine - coarse);
    est.converged = est.error_indicator <= opt.tolerance;
  }
  if (f.arity() == 1) est.root_formula = mahler_roots(f);
  return est;
}

LaurentPoly restrict_to_subtorus(const LaurentPoly& f, const std::vector<ExpVec>& param) {
  return monomial_substitution(f, param);
}

MahlerEstimate mahler_on_subgroup(const LaurentPoly& f, const std::vector<ExpVec>& param, int level,
                                  const MahlerOptions& options) {
  LaurentPoly g = restrict_to_subtorus(f, param);
  if (g.is_zero()) throw DomainError("f vanishes identically on the subgroup");
  return mahler(g, level, options);
}

GrowthTable growth_experiment(const LaurentPoly& f, const std::vector<std::int64_t>& ns, int mahler_level,
                              const Limits& limits) {
  GrowthTable table;
  table.reference_log_mahler = std::log(mahler(f, mahler_level).value);
  for (auto n : ns) {
    GrowthRow row{n, W_n(f, n, limits), std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN()};
    if (row.w != 0) {
      row.log_ratio = log_abs(row.w) / std::pow(static_cast<double>(n), f.arity());
      row.root = std::exp(row.log_ratio);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace ddseq
