#include "isb/ansatz_exc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "isb/ansatz_gs.hpp"

namespace isb::exc {

namespace {

using Complex = std::complex<double>;

Eigen::Vector2cd phase_fixed(Eigen::Vector2cd v) {
  const int lead = std::abs(v[0]) >= std::abs(v[1]) ? 0 : 1;
  const double mag = std::abs(v[lead]);
  if (mag > 0.0) v *= std::conj(v[lead]) / mag;
  v.normalize();
  return v;
}

}  // namespace

Complex mixing_coupling(const tim::TimParams& t, const ChainParams& p, double qd,
                        const tim::BogoliubovPair& pair) {
  const Complex fano_factor = 1.0 - std::exp(Complex(0.0, -qd));
  return t.h_t * (2.0 * p.g / p.omega) * fano_factor * (pair.u + std::conj(pair.v));
}

BandPoint band_from_elements(double qd, double omega_q, double eps_q, Complex g_q) {
  BandPoint bp;
  bp.qd = qd;
  bp.omega_q = omega_q;
  bp.eps_q = eps_q;
  bp.g_q = g_q;

  const double half_sum = 0.5 * (omega_q + eps_q);
  const double half_split = 0.5 * std::hypot(omega_q - eps_q, 2.0 * std::abs(g_q));
  bp.e_minus = half_sum - half_split;
  bp.e_plus = half_sum + half_split;

  if (std::abs(g_q) == 0.0) {
    // Decoupled branches: pure eigenvectors, boson first at exact degeneracy.
    const Eigen::Vector2cd fermion(1.0, 0.0), boson(0.0, 1.0);
    const bool fermion_lower = eps_q < omega_q;
    bp.mix_minus = fermion_lower ? fermion : boson;
    bp.mix_plus = fermion_lower ? boson : fermion;
    return bp;
  }

  // Basis (fermion, boson); only |g_q| reaches the eigenvalues, the phase
  // assignment below is a convention.
  Eigen::Matrix2cd h;
  h << Complex(eps_q, 0.0), std::conj(g_q), g_q, Complex(omega_q, 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
  bp.mix_minus = phase_fixed(solver.eigenvectors().col(0));
  bp.mix_plus = phase_fixed(solver.eigenvectors().col(1));
  return bp;
}

BandPoint band_point(const ChainParams& p, double qd) {
  p.validate();
  if (!(qd >= 0.0 && qd <= std::numbers::pi))
    throw std::invalid_argument("band_point: qd must lie in [0, pi]");
  const tim::TimParams t = gs::lf_effective(p);
  const double ratio = 2.0 * p.g / p.omega;
  const double s = std::sin(0.5 * qd);
  const double omega_q = p.omega + 4.0 * t.h_t * ratio * ratio * s * s;
  const double eps_q = tim::dispersion(t, qd);
  const Complex g_q = mixing_coupling(t, p, qd, tim::bogoliubov(t, qd));
  return band_from_elements(qd, omega_q, eps_q, g_q);
}

std::vector<double> finite_momentum_grid(int sites) {
  if (sites < 2 || sites % 2 != 0)
    throw std::invalid_argument("finite_momentum_grid: sites must be even >= 2");
  std::vector<double> qs(sites / 2);
  for (int n = 0; n < sites / 2; ++n)
    qs[n] = 2.0 * std::numbers::pi * n / sites;
  return qs;
}

std::vector<BandPoint> band_structure(const ChainParams& p, const BandGrid& grid) {
  p.validate();
  std::vector<double> qs;
  if (grid.kind == BandGrid::Kind::FiniteN) {
    p.validate_finite_even();
    qs = finite_momentum_grid(p.sites);
  } else {
    if (grid.n_q < 1)
      throw std::invalid_argument("band_structure: n_q must be >= 1");
    qs.resize(grid.n_q);
    for (int j = 0; j < grid.n_q; ++j)
      qs[j] = std::numbers::pi * j / grid.n_q;
  }
  std::vector<BandPoint> out;
  out.reserve(qs.size());
  for (double qd : qs) out.push_back(band_point(p, qd));
  return out;
}

}  // namespace isb::exc
