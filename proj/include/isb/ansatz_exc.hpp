#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "isb/chain.hpp"
#include "isb/tim.hpp"

namespace isb::exc {

/// Two-band point at momentum qd in the half Brillouin zone [0, pi).
/// Mixing eigenvectors are (beta_f, beta_b): fermionic then bosonic
/// amplitude, normalized, phase fixed so the dominant component is
/// real and >= 0.
struct BandPoint {
  double qd = 0.0;
  double omega_q = 0.0;            ///< bare boson branch
  double eps_q = 0.0;              ///< bare spin branch
  std::complex<double> g_q;        ///< branch mixing; only |g_q| is observable
  double e_minus = 0.0;
  double e_plus = 0.0;
  Eigen::Vector2cd mix_minus;
  Eigen::Vector2cd mix_plus;
};

/// Branch mixing g_q = h_t (2g/omega) (1 - e^{-i qd}) (u_q + v_q^*).
/// Exposed separately so convention flips of the Bogoliubov pair can be
/// probed; everything exported downstream depends only on |g_q|.
std::complex<double> mixing_coupling(const tim::TimParams& t, const ChainParams& p,
                                     double qd, const tim::BogoliubovPair& pair);

/// Assembles a band point from precomputed branch energies and coupling.
BandPoint band_from_elements(double qd, double omega_q, double eps_q,
                             std::complex<double> g_q);

/// Diagonalizes the 2x2 quasiparticle Hamiltonian built on the Lang-Firsov
/// ground state at momentum qd in [0, pi].
BandPoint band_point(const ChainParams& p, double qd);

struct BandGrid {
  enum class Kind {
    Uniform,  ///< qd_j = pi j / n_q, j = 0 .. n_q - 1
    FiniteN,  ///< qd_n = 2 pi n / N, n = 0 .. N/2 - 1 (N from ChainParams)
  };
  Kind kind = Kind::Uniform;
  int n_q = 64;
};

/// Half-Brillouin-zone momenta of an N-site chain, qd = 2 pi n / N.
std::vector<double> finite_momentum_grid(int sites);

/// Band structure on the requested grid, ascending qd.
std::vector<BandPoint> band_structure(const ChainParams& p, const BandGrid& grid);

}  // namespace isb::exc
