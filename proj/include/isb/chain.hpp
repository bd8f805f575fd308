#pragma once

#include <cmath>
#include <stdexcept>

namespace isb {

/// Physical parameters of the interspersed spin-boson chain: alternating
/// spins (frequency omega0) and bosonic modes (frequency omega), each spin
/// coupled with strength +g to its right boson and -g to its left one.
///
/// The lattice spacing is fixed to 1; momenta are always quoted as qd.
/// sites == 0 means the thermodynamic limit.
struct ChainParams {
  double omega0 = 1.0;  ///< spin resonance frequency, >= 0
  double omega = 1.0;   ///< boson resonance frequency, > 0
  double g = 0.0;       ///< spin-boson coupling (either sign)
  int sites = 0;        ///< unit cells; 0 = thermodynamic limit
  double spacing = 1.0; ///< lattice spacing d, fixed to 1

  bool thermodynamic() const { return sites == 0; }

  void validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega))
      throw std::invalid_argument("ChainParams: omega must be finite and > 0");
    if (!(omega0 >= 0.0) || !std::isfinite(omega0))
      throw std::invalid_argument("ChainParams: omega0 must be finite and >= 0");
    if (!std::isfinite(g))
      throw std::invalid_argument("ChainParams: g must be finite");
    if (sites < 0)
      throw std::invalid_argument("ChainParams: sites must be >= 0");
    if (spacing != 1.0)
      throw std::invalid_argument("ChainParams: lattice spacing is fixed to 1");
  }

  /// Validates and additionally requires an even finite chain length,
  /// as needed by finite-momentum grids and the periodic oracle.
  void validate_finite_even() const {
    validate();
    if (sites < 2 || sites % 2 != 0)
      throw std::invalid_argument("ChainParams: finite grids need an even sites >= 2");
  }
};

}  // namespace isb
