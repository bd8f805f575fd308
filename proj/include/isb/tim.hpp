#pragma once

#include <complex>
#include <stdexcept>

namespace isb::tim {

/// Couplings of the effective Ising chain
///
///   H = J sum_i sx_i sx_{i+1} + h_t sum_i sz_i + h_l sum_i sx_i.
///
/// J carries either sign: the Lang-Firsov frame produces an
/// antiferromagnetic J > 0, the Silbey-Harris frame a ferromagnetic J < 0.
/// The longitudinal field h_l is only consumed by the variational solvers;
/// the exact solution below requires h_l = 0.
struct TimParams {
  double J = 0.0;
  double h_t = 0.0;
  double h_l = 0.0;

  void validate() const {
    if (!std::isfinite(J) || !std::isfinite(h_t) || !std::isfinite(h_l))
      throw std::invalid_argument("TimParams: couplings must be finite");
    if (h_t < 0.0)
      throw std::invalid_argument("TimParams: transverse field must be >= 0");
  }
  void require_no_longitudinal(const char* who) const {
    validate();
    if (h_l != 0.0)
      throw std::invalid_argument(std::string(who) + ": requires h_l = 0");
  }
};

/// Bogoliubov rotation diagonalizing the Jordan-Wigner fermions at momentum
/// qd. Convention: u_q real >= 0, the phase sits on v_q (purely imaginary
/// for this chain). |u|^2 + |v|^2 = 1. At a gapless momentum the pair is
/// convention dependent; the flag marks it and the tie-break below applies.
struct BogoliubovPair {
  std::complex<double> u;
  std::complex<double> v;
  double qd = 0.0;
  bool gapless = false;
};

/// Quasiparticle dispersion e_q = 2 sqrt((J cos qd + h_t)^2 + (J sin qd)^2).
double dispersion(const TimParams& p, double qd);

/// (u_q, v_q) such that g+_q = u_q c+_q + v_q* c_{-q} creates the positive
/// energy quasiparticle of the Bogoliubov-de-Gennes block at qd.
BogoliubovPair bogoliubov(const TimParams& p, double qd);

/// Thermodynamic-limit ground energy per site (Pfeuty's closed form,
/// P. Pfeuty, Ann. Phys. 57, 79 (1970)), written symmetrically as
/// -(2/pi)(|J| + h_t) E(theta) with theta = 2 sqrt(h_t |J|)/(|J| + h_t).
double ground_energy_per_site(const TimParams& p);

/// Free-fermion ground energy of the periodic N-site chain in the
/// antiperiodic (even fermion parity) sector: -1/2 sum_q e_q over
/// qd = pi(2n+1)/N, n = 0..N-1. N must be even (periodic antiferromagnet).
double finite_ground_energy(const TimParams& p, int sites);

/// Spontaneous magnetization |<sx>| = (1 - lambda^2)^{1/8} for lambda < 1,
/// zero at and beyond the critical point lambda = 1.
double magnetization(double lambda);

}  // namespace isb::tim
