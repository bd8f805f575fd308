#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "isb/chain.hpp"
#include "isb/ed/oracle.hpp"

#include "json.hpp"

namespace isb::spect {

/// Parameters of the non-invasive probe. eta is the numerical Lorentzian
/// broadening used only by the Kubo observable; v_g the waveguide group
/// velocity used only by the Fano transmission.
struct ProbeParams {
  double g_p = 0.0;      ///< system-probe coupling, >= 0
  double omega_p = 0.0;  ///< probe resonator / waveguide reference frequency
  double alpha_p = 0.0;  ///< coherent drive amplitude (Kubo)
  double v_g = 1.0;      ///< group velocity (Fano)
  double eta = 1e-2;     ///< Lorentzian broadening (Kubo), > 0

  void validate() const {
    if (!(g_p >= 0.0) || !std::isfinite(g_p))
      throw std::invalid_argument("ProbeParams: g_p must be finite and >= 0");
    if (!std::isfinite(omega_p) || !std::isfinite(alpha_p))
      throw std::invalid_argument("ProbeParams: omega_p, alpha_p must be finite");
    if (!(eta > 0.0) || !std::isfinite(eta))
      throw std::invalid_argument("ProbeParams: eta must be finite and > 0");
    if (!std::isfinite(v_g) || v_g == 0.0)
      throw std::invalid_argument("ProbeParams: v_g must be finite and nonzero");
  }
  /// The linear-response modelling assumes a weak drive.
  bool weak_drive() const { return alpha_p <= 0.2; }
};

enum class BandLabel { Lower, Upper };

/// One discrete quasiparticle resonance seen by the waveguide.
struct Resonance {
  double energy = 0.0;
  double width = 0.0;  ///< Gamma = |g_{q band}|^2 / v_g, >= 0
  BandLabel band = BandLabel::Lower;
  double qd = 0.0;
};

struct ResonanceSet {
  std::vector<Resonance> items;
  void validate() const;
};

/// Sampled spectrum with provenance. 1D curves leave `rows` empty; the
/// Kubo map stores one row per momentum.
struct SpectrumCurve {
  std::string axis_name;
  Eigen::ArrayXd axis;  ///< strictly increasing
  std::string row_name;
  Eigen::ArrayXd rows;
  Eigen::ArrayXXd values;  ///< max(1, rows.size()) x axis.size()
  nlohmann::json metadata;

  void validate() const;
};

/// |A_q(nu)|: Lorentzian-broadened pole expansion of the linear response to
/// a coherent probe on the first spin. Pole weights follow the band mixing
/// (boson character of each band); a static staggered component rides at
/// (qd = pi, nu = 0) with weight equal to the boson polarization.
SpectrumCurve kubo_response(const ChainParams& p, const ProbeParams& probe,
                            const Eigen::ArrayXd& nu_grid,
                            const Eigen::ArrayXd& q_grid);

/// T(omega_k) = |1 + i sum_j Gamma_j / (omega_k - eps_j)|^{-2}; exact pole
/// hits evaluate to the limiting value 0.
SpectrumCurve fano_transmission(const ResonanceSet& res,
                                const Eigen::ArrayXd& omega_k_grid);

struct UniformWidths {
  double gamma0 = 0.0;
};
struct OracleWidths {
  const ed::EdResult* result = nullptr;
  double match_window = 0.0;  ///< 0: derive from the local level spacing
};
/// One width per resonance, ordered ascending in qd, lower band first.
struct UserWidths {
  std::vector<double> widths;
};
using WidthSpec = std::variant<UniformWidths, OracleWidths, UserWidths>;

/// Resonance energies from the two-band ansatz on the finite-N momentum
/// grid; widths per the selected mode. The upper band at qd = 0 decouples
/// from the waveguide and always gets width 0.
ResonanceSet resonances_from_ansatz(const ChainParams& p, const ProbeParams& probe,
                                    const WidthSpec& widths);

struct WellResolvedEntry {
  Resonance resonance;
  double spacing = 0.0;  ///< distance to the nearest other resonance
  double ratio = 0.0;    ///< width / spacing
  bool flagged = false;  ///< ratio > 0.1
};
struct WellResolvedReport {
  std::vector<WellResolvedEntry> entries;
  bool all_resolved = true;
};

/// Checks Gamma << level spacing for every resonance; ratios above 0.1 are
/// flagged as unresolved.
WellResolvedReport well_resolved_check(const ResonanceSet& res);

/// CSV serialization: one row per grid point.
void write_spectrum_csv(const SpectrumCurve& curve, std::ostream& out);
/// JSON serialization: metadata plus plain arrays.
nlohmann::json spectrum_to_json(const SpectrumCurve& curve);

}  // namespace isb::spect
