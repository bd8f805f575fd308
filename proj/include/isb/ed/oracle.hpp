#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "isb/chain.hpp"
#include "isb/ed/basis.hpp"
#include "isb/ed/lanczos.hpp"
#include "isb/ed/operator.hpp"

namespace isb::spect {
struct ProbeParams;
}

namespace isb::ed {

/// Ground-state expectation values. Finite rings do not break the
/// staggered symmetry, so besides the raw per-site values the staggered
/// correlator amplitudes sqrt(<O^2>) are reported; those are the meaningful
/// order parameters when the ground multiplet is (near) degenerate.
struct Observables {
  Eigen::ArrayXd sigma_x;     ///< <sx_i>
  Eigen::ArrayXd sigma_z;     ///< <sz_i>
  Eigen::ArrayXd boson_re;    ///< <a_i> (real for real ground vectors)
  Eigen::ArrayXd occupation;  ///< <a_i^+ a_i>
  double staggered_sx = 0.0;  ///< sqrt<( (1/N) sum (-1)^i sx_i )^2>
  double staggered_boson = 0.0;  ///< sqrt<( (1/N) sum (-1)^i (a_i + a_i^+)/2 )^2>
};

struct EdResult {
  ChainParams params;
  TruncationSpec spec;
  Eigen::VectorXd energies;   ///< ascending lowest-k eigenvalues
  Eigen::MatrixXd vectors;    ///< dim x k eigenvectors (basis layout of Basis)
  Eigen::VectorXd residuals;
  int iterations = 0;
  bool solver_converged = false;
  Observables obs;
  double truncation_drift = 0.0;  ///< |E0(n_max) - E0(n_max - 1)|
  bool truncation_converged = false;
};

struct GroundStateOptions {
  std::uint64_t seed = 0x15b0ed5eedULL;
  bool compute_drift = true;
  double drift_tolerance = 1e-6;  ///< certified when drift <= tol * max(1, |E0|)
};

/// Lowest-k eigenpairs plus ground-state observables and a truncation
/// certificate (the same solve repeated at n_max - 1).
EdResult ground_state(const ChainParams& p, const TruncationSpec& t, int k,
                      const GroundStateOptions& opts = {});

// Operators accepted by matrix_element.
struct SigmaX { int site = 0; };
struct Annihilation { int site = 0; };
struct MomentumAnnihilation { double qd = 0.0; };  ///< (1/sqrt N) sum_j e^{-i qd j} a_j
struct StaggeredSigmaX {};                          ///< (1/N) sum_j (-1)^j sx_j
struct StaggeredAnnihilation {};                    ///< (1/N) sum_j (-1)^j a_j
using ElementOperator = std::variant<SigmaX, Annihilation, MomentumAnnihilation,
                                     StaggeredSigmaX, StaggeredAnnihilation>;

/// Exact matrix element <bra| O |ket> between computed eigenvectors.
std::complex<double> matrix_element(const EdResult& result, const ElementOperator& op,
                                    int bra, int ket);

/// Per-site boson amplitudes <a_j(t)> along a real-time probe protocol.
struct TimeSeries {
  Eigen::VectorXd times;
  Eigen::MatrixXcd amplitudes;  ///< sites x times
};

/// Couples a single resonator prepared in a coherent state to the first
/// spin and Krylov-propagates the composite system over a uniform grid.
TimeSeries probe_dynamics(const ChainParams& p, const TruncationSpec& t,
                          const spect::ProbeParams& probe, int n_probe,
                          const Eigen::VectorXd& t_grid,
                          const GroundStateOptions& opts = {});

/// Discrete momentum-frequency map of a time series: Hann-windowed Fourier
/// transform of <a_j(t)> - mean, combined over sites at k = 2 pi n / N.
struct SpectralMap {
  Eigen::VectorXd k_grid;
  Eigen::VectorXd nu_grid;
  Eigen::ArrayXXd magnitude;  ///< k x nu
};
SpectralMap spectrum_from_series(const TimeSeries& series,
                                 const Eigen::VectorXd& nu_grid);

enum class SweepQuantity { GroundEnergy, MeanOccupation, StaggeredMagnetization };

struct ConvergenceRow {
  int n_max = 0;
  double value = 0.0;
  double change = 0.0;  ///< value minus the previous row's value
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  bool converged = false;  ///< last |change| below the user tolerance
};

/// The selected quantity as a function of n_max up to t.n_max.
ConvergenceTable convergence_sweep(const ChainParams& p, const TruncationSpec& t,
                                   SweepQuantity quantity, double tolerance,
                                   const GroundStateOptions& opts = {});

/// Binary eigenvector dump. Layout (all little-endian):
///   bytes 0..7   magic "ISBEDVEC"
///   u32 version (1), i32 n_max, i32 sites, u8 boundary (0 periodic, 1 open),
///   u64 dimension, u32 k,
/// then k vectors of `dimension` (re, im) double pairs in Basis order.
void dump_eigenvectors(const EdResult& result, const std::string& path);

struct EigenvectorDump {
  int n_max = 0;
  int sites = 0;
  TruncationSpec::Boundary boundary = TruncationSpec::Boundary::Periodic;
  Eigen::MatrixXcd vectors;
};
EigenvectorDump read_eigenvectors(const std::string& path);

/// CSV exports (per-site observables; time series one row per grid point).
void write_observables_csv(const EdResult& result, std::ostream& out);
void write_time_series_csv(const TimeSeries& series, std::ostream& out);

}  // namespace isb::ed
