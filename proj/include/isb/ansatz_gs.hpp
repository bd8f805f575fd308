#pragma once

#include <string>
#include <vector>

#include "isb/chain.hpp"
#include "isb/tim.hpp"

namespace isb::gs {

enum class AnsatzKind { LangFirsov, SilbeyHarris };

/// Result of a ground-state variational minimization. Magnetizations are
/// staggered amplitudes (the Neel pattern alternates their sign site to
/// site). lambda = h_t/|J| of the effective Ising chain; +inf when J = 0.
struct VariationalSolution {
  AnsatzKind kind = AnsatzKind::LangFirsov;
  double f_star = 0.0;            ///< polaron displacement (== g for Lang-Firsov)
  double alpha_star = 0.0;        ///< coherent amplitude, reported >= 0
  double energy_per_site = 0.0;
  double lambda = 0.0;
  double spin_magnetization = 0.0;
  double boson_polarization = 0.0;
  bool ordered = false;
  bool converged = true;
  std::string message;
};

/// Effective Ising couplings of the Lang-Firsov frame:
/// J = 2 g^2 / omega, h_t = (omega0/2) exp(-4 g^2 / omega^2).
tim::TimParams lf_effective(const ChainParams& p);

/// Closed-form Lang-Firsov solution (f = g, vacuum coherent amplitude).
VariationalSolution lf_solve(const ChainParams& p);

/// Unique g >= 0 on the Lang-Firsov critical line h_t(g) = J(g),
/// bisection to 1e-10 relative.
double lf_critical_g(double omega0, double omega);

/// Silbey-Harris frame couplings: J(f) = 2 f (f - 2g) / omega,
/// h_t(f) = (omega0/2) exp(-4 f^2 / omega^2), h_l(f, alpha) = 4 alpha (g - f).
tim::TimParams sh_effective(const ChainParams& p, double f, double alpha);

/// Variational energy density of the Silbey-Harris ansatz. The Ising part
/// uses |J(f)| in the Pfeuty term (required for consistency with the
/// Lang-Firsov limit at f = g) and the longitudinal field is decoupled with
/// the zero-longitudinal-field magnetization.
double sh_energy(const ChainParams& p, double f, double alpha);

/// Two-start Nelder-Mead minimization of sh_energy over (f, alpha);
/// starts (g, 0) and (0, 0), the lower result wins, alpha reported >= 0.
VariationalSolution sh_solve(const ChainParams& p);

/// Smallest g >= 0 where the Silbey-Harris minimizer's lambda crosses 1,
/// bisection over g to 1e-6 relative with a per-point sh_solve.
double sh_critical_g(double omega0, double omega);

/// One axis of a sweep grid; count == 1 pins the axis to lo.
struct AxisSpec {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  static AxisSpec single(double v) { return {v, v, 1}; }
  double at(int i) const {
    return count < 2 ? lo : lo + (hi - lo) * double(i) / double(count - 1);
  }
  void validate() const {
    if (count < 1 || !std::isfinite(lo) || !std::isfinite(hi))
      throw std::invalid_argument("AxisSpec: need finite bounds and count >= 1");
  }
};

enum class SweepMode {
  OmegaOmega0,  ///< axes are (omega, omega0, g)
  DeltaTheta,   ///< axes are (delta, theta, g); omega = delta cos theta, omega0 = delta sin theta
};

struct SweepSpec {
  SweepMode mode = SweepMode::OmegaOmega0;
  AxisSpec a;  ///< omega or delta
  AxisSpec b;  ///< omega0 or theta
  AxisSpec g;
};

/// One row of a phase-diagram sweep: both ansaetze side by side so their
/// disagreement regions are directly inspectable.
struct SweepRow {
  double omega = 0.0, omega0 = 0.0, delta = 0.0, theta = 0.0, g = 0.0;
  VariationalSolution lf;
  VariationalSolution sh;
  bool ok = true;
  std::string error;
};

/// Row-major sweep over the grid; per-point failures are recorded in the
/// row and the sweep continues. The output is independent of worker count.
std::vector<SweepRow> phase_diagram(const SweepSpec& spec, int workers = 1);

}  // namespace isb::gs
