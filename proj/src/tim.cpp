#include "isb/tim.hpp"

#include <cmath>
#include <numbers>

#include "isb/specfun.hpp"

namespace isb::tim {

namespace {

constexpr double kGaplessTol = 1e-12;

// Diagonal and pairing entries of the 2x2 Bogoliubov-de-Gennes block in the
// Nambu basis (c_q, c+_{-q}):  [[a, i b], [-i b, -a]].
struct BdgEntries {
  double a;
  double b;
};

BdgEntries bdg_entries(const TimParams& p, double qd) {
  return {2.0 * (p.J * std::cos(qd) + p.h_t), -2.0 * p.J * std::sin(qd)};
}

}  // namespace

double dispersion(const TimParams& p, double qd) {
  p.validate();
  const auto [a, b] = bdg_entries(p, qd);
  return std::hypot(a, b);
}

BogoliubovPair bogoliubov(const TimParams& p, double qd) {
  p.validate();
  const auto [a, b] = bdg_entries(p, qd);
  const double eps = std::hypot(a, b);

  BogoliubovPair out;
  out.qd = qd;
  out.gapless = eps < kGaplessTol;
  if (out.gapless) {
    const double r = std::numbers::sqrt2 / 2.0;
    out.u = r;
    out.v = {0.0, r};
    return out;
  }
  if (b == 0.0) {
    // Pairing vanishes at the zone center and edge; the block is diagonal.
    if (a > 0.0) {
      out.u = 1.0;
      out.v = 0.0;
    } else {
      out.u = 0.0;
      out.v = {0.0, 1.0};
    }
    return out;
  }
  if (a >= 0.0) {
    const double u = std::sqrt((eps + a) / (2.0 * eps));
    out.u = u;
    out.v = {0.0, (eps - a) * u / b};
  } else {
    // Stable branch when u is the small component.
    const double vmag = std::sqrt((eps - a) / (2.0 * eps));
    out.u = (eps + a) * vmag / std::abs(b);
    out.v = {0.0, b > 0.0 ? vmag : -vmag};
  }
  return out;
}

double ground_energy_per_site(const TimParams& p) {
  p.require_no_longitudinal("ground_energy_per_site");
  const double j = std::abs(p.J);
  const double h = p.h_t;
  const double scale = j + h;
  if (scale == 0.0) return 0.0;
  const auto theta = specfun::EllipticArg(
      std::min(2.0 * std::sqrt(h * j) / scale, 1.0));
  return -(2.0 / std::numbers::pi) * scale * specfun::ellipe(theta);
}

double finite_ground_energy(const TimParams& p, int sites) {
  p.require_no_longitudinal("finite_ground_energy");
  if (sites < 2 || sites % 2 != 0 || sites > (1 << 20))
    throw std::invalid_argument(
        "finite_ground_energy: sites must be even and in [2, 2^20]");
  double sum = 0.0;
  for (int n = 0; n < sites; ++n) {
    const double qd = std::numbers::pi * (2.0 * n + 1.0) / sites;
    sum += dispersion(p, qd);
  }
  return -0.5 * sum;
}

double magnetization(double lambda) {
  if (std::isnan(lambda) || lambda < 0.0)
    throw std::domain_error("magnetization: lambda must be >= 0");
  if (lambda >= 1.0) return 0.0;
  return std::pow((1.0 - lambda) * (1.0 + lambda), 0.125);
}

}  // namespace isb::tim
