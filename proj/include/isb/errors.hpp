#pragma once

#include <stdexcept>
#include <string>

namespace isb {

/// Thrown when an iterative solver fails to reach its convergence target.
/// Carries the best iterate found so the caller can still inspect it.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isb
