#pragma once

#include <optional>
#include <vector>

#include "ddseq/ddcore.hpp"

namespace ddseq {

struct MahlerOptions {
  std::uint64_t base_nodes = 0;  // per dimension at level 0; 0 picks a default by arity
  double tolerance = 1e-3;       // successive levels differing by more flag non-convergence
  bool parallel = true;
  std::uint64_t seed = 20240601;  // Monte Carlo (arity >= 4)
};

struct MahlerEstimate {
  double value = 0.0;               // quadrature or Monte Carlo estimate of M(f)
  std::uint64_t nodes = 0;
  double error_indicator = 0.0;     // |estimate - estimate at the previous level|
  bool converged = true;
  std::uint64_t shifted_nodes = 0;
  std::optional<double> root_formula;  // one variable: |lead| * prod max(1, |root|)
};

MahlerEstimate mahler(const LaurentPoly& f, int level = 0, const MahlerOptions& options = {});

/// One-variable Mahler measure from the roots (Eigen companion eigenvalues).
double mahler_roots(const LaurentPoly& f);

/// f restricted to {(w^P[0], ..., w^P[N-1])}, P an N x r integer matrix.
LaurentPoly restrict_to_subtorus(const LaurentPoly& f, const std::vector<ExpVec>& param);
MahlerEstimate mahler_on_subgroup(const LaurentPoly& f, const std::vector<ExpVec>& param, int level = 0,
                                  const MahlerOptions& options = {});

struct GrowthRow {
  std::int64_t n;
  Int w;
  double log_ratio;  // log|W_n| / n^N, NaN when W_n = 0
  double root;       // exp(log_ratio)
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  double reference_log_mahler;
};

GrowthTable growth_experiment(const LaurentPoly& f, const std::vector<std::int64_t>& ns, int mahler_level = 0,
                              const Limits& limits = {});

}  // namespace ddseq
