#pragma once

#include <Eigen/Dense>

#include "isb/ed/operator.hpp"

namespace isb::ed {

struct KrylovOptions {
  int subspace = 30;       ///< Lanczos basis size per substep
  double tolerance = 1e-8; ///< error budget per requested step
};

/// Advances psi by exp(-i H dt) using the Lanczos approximation with
/// adaptive substepping; the substep error estimates are summed against the
/// per-call budget. H must be real symmetric.
void propagate(const RealLinearOperator& op, Eigen::VectorXcd& psi, double dt,
               const KrylovOptions& opts = {});

}  // namespace isb::ed
