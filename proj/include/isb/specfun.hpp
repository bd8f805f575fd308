#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace isb::specfun {

/// Modulus of the complete elliptic integral of the second kind.
/// Valid range is [0, 1]; anything else is a domain error.
class EllipticArg {
 public:
  explicit EllipticArg(double theta_t) : theta_(theta_t) {
    if (!std::isfinite(theta_) || theta_ < 0.0 || theta_ > 1.0)
      throw std::domain_error("EllipticArg: modulus must lie in [0, 1]");
  }
  double value() const { return theta_; }

 private:
  double theta_;
};

/// E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 q) dq via the arithmetic-geometric
/// mean, a relative threshold of 1e-15 stops the iteration. The digit count
/// doubles per step, so this reaches machine precision in a handful of
/// iterations.
template <typename Real>
Real ellipe_agm(Real k) {
  if (k == Real(0)) return std::numbers::pi_v<Real> / 2;
  if (k == Real(1)) return Real(1);
  Real a = 1;
  Real b = std::sqrt((Real(1) - k) * (Real(1) + k));
  Real c = k;
  Real sum = Real(0.5) * c * c;  // 2^{n-1} c_n^2 term at n = 0
  Real pow2 = Real(0.5);
  while (std::abs(c) > Real(1e-15) * a) {
    c = Real(0.5) * (a - b);
    const Real an = Real(0.5) * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2;
    sum += pow2 * c * c;
  }
  const Real big_k = std::numbers::pi_v<Real> / (2 * a);
  return big_k * (1 - sum);
}

/// Complete elliptic integral of the second kind, E(theta_t).
inline double ellipe(EllipticArg theta_t) { return ellipe_agm(theta_t.value()); }

/// theta_t = sqrt(4 lambda) / (1 + lambda), symmetric under lambda -> 1/lambda.
inline EllipticArg theta_from_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw std::domain_error("theta_from_lambda: lambda must be finite and >= 0");
  const double t = 2.0 * std::sqrt(lambda) / (1.0 + lambda);
  return EllipticArg(std::min(t, 1.0));
}

}  // namespace isb::specfun
