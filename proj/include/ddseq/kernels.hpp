#pragma once

#include <cstdint>
#include <vector>

#include "ddseq/cyclo.hpp"

namespace ddseq {

// Each kernel has a serial reference and an OpenMP version. Exact kernels
// agree bit for bit; floating sums agree up to summation order.

/// Norm of f(xi) for each representative; 0 where f(xi) vanishes.
std::vector<Int> orbit_norms_serial(const LaurentPoly& f, const std::vector<TorsionPoint>& reps);
std::vector<Int> orbit_norms_omp(const LaurentPoly& f, const std::vector<TorsionPoint>& reps);

/// Floating view of a Laurent polynomial for quadrature.
struct NumericPoly {
  int arity = 1;
  std::vector<double> coeffs;
  std::vector<std::vector<double>> exps;
  static NumericPoly from(const LaurentPoly& f);
};

struct GridSum {
  double sum = 0.0;
  std::uint64_t nodes = 0;
  std::uint64_t shifted = 0;  // nodes moved by half a step because |f| < 1e-12
};

/// Sum of log|f| over the K^N tensor grid on the torus.
GridSum torus_log_sum_serial(const NumericPoly& f, std::uint64_t k);
GridSum torus_log_sum_omp(const NumericPoly& f, std::uint64_t k);

}  // namespace ddseq
