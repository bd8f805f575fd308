#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "isb/ed/operator.hpp"

namespace isb::ed {

struct LanczosOptions {
  int krylov_cap = 400;          ///< hard cap on the Krylov basis
  double tolerance = 1e-9;       ///< residual target relative to the norm estimate
  std::uint64_t seed = 0x15b0ed5eedULL;  ///< start-vector seed
  int dense_cutoff = 4096;       ///< below this, solve densely instead
};

struct EigenSolveResult {
  Eigen::VectorXd values;    ///< ascending lowest-k eigenvalues
  Eigen::MatrixXd vectors;   ///< dim x k, orthonormal
  Eigen::VectorXd residuals; ///< ||H v - E v|| per pair
  double norm_estimate = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string message;
};

/// Lowest-k eigenpairs of a real symmetric operator. Small dimensions go
/// through a dense solve; otherwise Lanczos with full reorthogonalization
/// and random-restart injection on breakdown (recovers degenerate
/// multiplets and disconnected sectors).
EigenSolveResult lowest_eigenpairs(const RealLinearOperator& op, int k,
                                   const LanczosOptions& opts = {});

}  // namespace isb::ed
