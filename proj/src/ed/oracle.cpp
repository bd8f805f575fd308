#include "isb/ed/oracle.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <ostream>

#include "isb/ed/krylov.hpp"
#include "isb/errors.hpp"
#include "isb/spectroscopy.hpp"

namespace isb::ed {

namespace {

using Complex = std::complex<double>;

Observables measure(const Basis& b, const Eigen::VectorXd& v) {
  const int n = b.sites();
  const std::uint64_t dim = b.dimension();
  Observables obs;
  obs.sigma_x.setZero(n);
  obs.sigma_z.setZero(n);
  obs.boson_re.setZero(n);
  obs.occupation.setZero(n);

  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const double w = v[idx] * v[idx];
    if (w == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      obs.sigma_z[i] += w * (b.spin_at(idx, i) == 0 ? 1.0 : -1.0);
      obs.occupation[i] += w * b.boson_at(idx, i);
    }
  }

  Eigen::VectorXd work;
  for (int i = 0; i < n; ++i) {
    apply_sigma_x(b, i, v, work);
    obs.sigma_x[i] = v.dot(work);
    apply_annihilation(b, i, v, work);
    obs.boson_re[i] = v.dot(work);
  }

  // Staggered correlators: sqrt(<O^2>) = ||O v|| for Hermitian O.
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(v.size());
  for (int i = 0; i < n; ++i) {
    apply_sigma_x(b, i, v, work);
    acc += (i % 2 == 0 ? 1.0 : -1.0) / n * work;
  }
  obs.staggered_sx = acc.norm();

  acc.setZero();
  for (int i = 0; i < n; ++i) {
    const double sign = (i % 2 == 0 ? 1.0 : -1.0) / (2.0 * n);
    apply_annihilation(b, i, v, work);
    acc += sign * work;
    apply_creation(b, i, v, work);
    acc += sign * work;
  }
  obs.staggered_boson = acc.norm();
  return obs;
}

double ground_energy_at(const ChainParams& p, const TruncationSpec& t, int n_max,
                        std::uint64_t seed) {
  TruncationSpec reduced = t;
  reduced.n_max = std::max(n_max, 0);
  Basis basis(reduced.n_max, reduced.sites);
  if (basis.dimension() > t.max_amplitudes)
    throw std::invalid_argument("ground_state: Hilbert dimension exceeds the cap");
  ChainOperator op(p, reduced);
  LanczosOptions lopts;
  lopts.seed = seed;
  const EigenSolveResult sol = lowest_eigenpairs(op, 1, lopts);
  if (!sol.converged) throw SolverError("ground_state: " + sol.message);
  return sol.values[0];
}

}  // namespace

EdResult ground_state(const ChainParams& p, const TruncationSpec& t, int k,
                      const GroundStateOptions& opts) {
  p.validate();
  t.validate();
  if (k < 1 || k > 20)
    throw std::invalid_argument("ground_state: k must lie in [1, 20]");

  ChainOperator op(p, t);
  LanczosOptions lopts;
  lopts.seed = opts.seed;
  EigenSolveResult sol = lowest_eigenpairs(op, k, lopts);
  if (!sol.converged)
    throw SolverError("ground_state: eigensolver did not converge (residual " +
                      std::to_string(sol.residuals.maxCoeff()) + "): " + sol.message);

  EdResult res;
  res.params = p;
  res.spec = t;
  res.energies = std::move(sol.values);
  res.vectors = std::move(sol.vectors);
  res.residuals = std::move(sol.residuals);
  res.iterations = sol.iterations;
  res.solver_converged = sol.converged;
  res.obs = measure(op.basis(), res.vectors.col(0));

  if (opts.compute_drift) {
    const double e_below = ground_energy_at(p, t, t.n_max - 1, opts.seed);
    res.truncation_drift = std::abs(res.energies[0] - e_below);
  }
  const double occ_cap = 0.5 * t.n_max;
  res.truncation_converged =
      opts.compute_drift &&
      res.truncation_drift <=
          opts.drift_tolerance * std::max(1.0, std::abs(res.energies[0])) &&
      res.obs.occupation.maxCoeff() < occ_cap;
  return res;
}

std::complex<double> matrix_element(const EdResult& result, const ElementOperator& op,
                                    int bra, int ket) {
  const int k = int(result.vectors.cols());
  if (bra < 0 || bra >= k || ket < 0 || ket >= k)
    throw std::out_of_range("matrix_element: eigenvector index out of range");
  Basis basis(result.spec.n_max, result.spec.sites);
  const Eigen::VectorXd& vk = result.vectors.col(ket);
  const Eigen::VectorXd& vb = result.vectors.col(bra);
  const int n = basis.sites();

  Eigen::VectorXd work;
  return std::visit(
      [&](const auto& o) -> Complex {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SigmaX>) {
          if (o.site < 0 || o.site >= n) throw std::out_of_range("matrix_element: site");
          apply_sigma_x(basis, o.site, vk, work);
          return Complex(vb.dot(work), 0.0);
        } else if constexpr (std::is_same_v<T, Annihilation>) {
          if (o.site < 0 || o.site >= n) throw std::out_of_range("matrix_element: site");
          apply_annihilation(basis, o.site, vk, work);
          return Complex(vb.dot(work), 0.0);
        } else if constexpr (std::is_same_v<T, MomentumAnnihilation>) {
          Complex acc(0.0, 0.0);
          for (int j = 0; j < n; ++j) {
            apply_annihilation(basis, j, vk, work);
            acc += std::exp(Complex(0.0, -o.qd * j)) * vb.dot(work);
          }
          return acc / std::sqrt(double(n));
        } else if constexpr (std::is_same_v<T, StaggeredSigmaX>) {
          double acc = 0.0;
          for (int j = 0; j < n; ++j) {
            apply_sigma_x(basis, j, vk, work);
            acc += (j % 2 == 0 ? 1.0 : -1.0) / n * vb.dot(work);
          }
          return Complex(acc, 0.0);
        } else {
          static_assert(std::is_same_v<T, StaggeredAnnihilation>);
          double acc = 0.0;
          for (int j = 0; j < n; ++j) {
            apply_annihilation(basis, j, vk, work);
            acc += (j % 2 == 0 ? 1.0 : -1.0) / n * vb.dot(work);
          }
          return Complex(acc, 0.0);
        }
      },
      op);
}

TimeSeries probe_dynamics(const ChainParams& p, const TruncationSpec& t,
                          const spect::ProbeParams& probe, int n_probe,
                          const Eigen::VectorXd& t_grid,
                          const GroundStateOptions& opts) {
  probe.validate();
  if (t_grid.size() < 2)
    throw std::invalid_argument("probe_dynamics: need at least two grid times");
  const double dt = t_grid[1] - t_grid[0];
  if (!(dt > 0.0)) throw std::invalid_argument("probe_dynamics: grid must increase");
  for (int i = 2; i < t_grid.size(); ++i)
    if (std::abs((t_grid[i] - t_grid[i - 1]) - dt) > 1e-9 * dt)
      throw std::invalid_argument("probe_dynamics: grid must be uniform");

  GroundStateOptions gopts = opts;
  gopts.compute_drift = false;
  const EdResult ground = ground_state(p, t, 1, gopts);

  ChainOperator chain(p, t);
  ProbeOperator full(chain, probe.omega_p, probe.g_p, n_probe);

  // Probe prepared in a truncated coherent state, system in its ground state.
  const std::uint64_t dc = chain.dimension();
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(full.dimension());
  double coeff = std::exp(-0.5 * probe.alpha_p * probe.alpha_p);
  for (int m = 0; m <= n_probe; ++m) {
    psi.segment(std::uint64_t(m) * dc, dc) =
        coeff * ground.vectors.col(0).cast<Complex>();
    coeff *= probe.alpha_p / std::sqrt(double(m + 1));
  }
  psi.normalize();

  const Basis& basis = chain.basis();
  const int n = basis.sites();
  TimeSeries series;
  series.times = t_grid;
  series.amplitudes.resize(n, t_grid.size());

  Eigen::VectorXcd block(dc), out(dc);
  const auto record = [&](int col) {
    for (int j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (int m = 0; m <= n_probe; ++m) {
        block = psi.segment(std::uint64_t(m) * dc, dc);
        apply_annihilation(basis, j, block, out);
        acc += block.dot(out);
      }
      series.amplitudes(j, col) = acc;
    }
  };

  KrylovOptions kopts;
  double now = t_grid[0];
  if (now != 0.0) propagate(full, psi, now, kopts);
  record(0);
  for (int i = 1; i < t_grid.size(); ++i) {
    propagate(full, psi, t_grid[i] - now, kopts);
    now = t_grid[i];
    record(i);
  }
  return series;
}

SpectralMap spectrum_from_series(const TimeSeries& series,
                                 const Eigen::VectorXd& nu_grid) {
  const int n = int(series.amplitudes.rows());
  const int nt = int(series.times.size());
  if (nt < 2) throw std::invalid_argument("spectrum_from_series: short series");
  const double dt = series.times[1] - series.times[0];

  SpectralMap map;
  map.nu_grid = nu_grid;
  map.k_grid.resize(n);
  for (int kk = 0; kk < n; ++kk)
    map.k_grid[kk] = 2.0 * std::numbers::pi * kk / n;
  map.magnitude.setZero(n, nu_grid.size());

  // DC removed per site, Hann window against leakage.
  Eigen::MatrixXcd centered = series.amplitudes;
  for (int j = 0; j < n; ++j)
    centered.row(j).array() -= centered.row(j).mean();
  Eigen::ArrayXd window(nt);
  for (int it = 0; it < nt; ++it)
    window[it] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * it / (nt - 1)));

  for (int kk = 0; kk < n; ++kk) {
    Eigen::VectorXcd site_sum = Eigen::VectorXcd::Zero(nt);
    for (int j = 0; j < n; ++j)
      site_sum += std::exp(Complex(0.0, -map.k_grid[kk] * j)) / std::sqrt(double(n)) *
                  centered.row(j).transpose();
    for (int iv = 0; iv < nu_grid.size(); ++iv) {
      Complex acc(0.0, 0.0);
      for (int it = 0; it < nt; ++it)
        acc += window[it] * std::exp(Complex(0.0, nu_grid[iv] * series.times[it])) *
               site_sum[it];
      map.magnitude(kk, iv) = std::abs(acc * dt);
    }
  }
  return map;
}

ConvergenceTable convergence_sweep(const ChainParams& p, const TruncationSpec& t,
                                   SweepQuantity quantity, double tolerance,
                                   const GroundStateOptions& opts) {
  p.validate();
  t.validate();
  ConvergenceTable table;
  for (int n = 1; n <= t.n_max; ++n) {
    TruncationSpec spec = t;
    spec.n_max = n;
    GroundStateOptions gopts = opts;
    gopts.compute_drift = false;
    const EdResult r = ground_state(p, spec, 1, gopts);
    ConvergenceRow row;
    row.n_max = n;
    switch (quantity) {
      case SweepQuantity::GroundEnergy: row.value = r.energies[0]; break;
      case SweepQuantity::MeanOccupation: row.value = r.obs.occupation.mean(); break;
      case SweepQuantity::StaggeredMagnetization: row.value = r.obs.staggered_sx; break;
    }
    row.change = table.rows.empty() ? 0.0 : row.value - table.rows.back().value;
    table.rows.push_back(row);
  }
  table.converged = table.rows.size() < 2 ||
                    std::abs(table.rows.back().change) <= tolerance;
  return table;
}

void dump_eigenvectors(const EdResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("dump_eigenvectors: cannot open " + path);
  const char magic[8] = {'I', 'S', 'B', 'E', 'D', 'V', 'E', 'C'};
  out.write(magic, 8);
  const std::uint32_t version = 1;
  const std::int32_t n_max = result.spec.n_max;
  const std::int32_t sites = result.spec.sites;
  const std::uint8_t boundary =
      result.spec.boundary == TruncationSpec::Boundary::Periodic ? 0 : 1;
  const std::uint64_t dim = std::uint64_t(result.vectors.rows());
  const std::uint32_t k = std::uint32_t(result.vectors.cols());
  out.write(reinterpret_cast<const char*>(&version), 4);
  out.write(reinterpret_cast<const char*>(&n_max), 4);
  out.write(reinterpret_cast<const char*>(&sites), 4);
  out.write(reinterpret_cast<const char*>(&boundary), 1);
  out.write(reinterpret_cast<const char*>(&dim), 8);
  out.write(reinterpret_cast<const char*>(&k), 4);
  for (std::uint32_t c = 0; c < k; ++c)
    for (std::uint64_t i = 0; i < dim; ++i) {
      const double pair[2] = {result.vectors(i, c), 0.0};
      out.write(reinterpret_cast<const char*>(pair), 16);
    }
  if (!out) throw std::runtime_error("dump_eigenvectors: write failed for " + path);
}

EigenvectorDump read_eigenvectors(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_eigenvectors: cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (std::memcmp(magic, "ISBEDVEC", 8) != 0)
    throw std::runtime_error("read_eigenvectors: bad magic");
  std::uint32_t version = 0, k = 0;
  std::int32_t n_max = 0, sites = 0;
  std::uint8_t boundary = 0;
  std::uint64_t dim = 0;
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&n_max), 4);
  in.read(reinterpret_cast<char*>(&sites), 4);
  in.read(reinterpret_cast<char*>(&boundary), 1);
  in.read(reinterpret_cast<char*>(&dim), 8);
  in.read(reinterpret_cast<char*>(&k), 4);
  if (version != 1) throw std::runtime_error("read_eigenvectors: unknown version");
  EigenvectorDump dump;
  dump.n_max = n_max;
  dump.sites = sites;
  dump.boundary = boundary == 0 ? TruncationSpec::Boundary::Periodic
                                : TruncationSpec::Boundary::Open;
  dump.vectors.resize(dim, k);
  for (std::uint32_t c = 0; c < k; ++c)
    for (std::uint64_t i = 0; i < dim; ++i) {
      double pair[2];
      in.read(reinterpret_cast<char*>(pair), 16);
      dump.vectors(i, c) = Complex(pair[0], pair[1]);
    }
  if (!in) throw std::runtime_error("read_eigenvectors: truncated file");
  return dump;
}

void write_observables_csv(const EdResult& result, std::ostream& out) {
  out.precision(17);
  out << "site,sigma_x,sigma_z,boson_re,occupation\n";
  for (int i = 0; i < result.obs.sigma_x.size(); ++i)
    out << i << ',' << result.obs.sigma_x[i] << ',' << result.obs.sigma_z[i] << ','
        << result.obs.boson_re[i] << ',' << result.obs.occupation[i] << '\n';
}

void write_time_series_csv(const TimeSeries& series, std::ostream& out) {
  out.precision(17);
  out << "t";
  for (int j = 0; j < series.amplitudes.rows(); ++j)
    out << ",re_a" << j << ",im_a" << j;
  out << '\n';
  for (int i = 0; i < series.times.size(); ++i) {
    out << series.times[i];
    for (int j = 0; j < series.amplitudes.rows(); ++j)
      out << ',' << series.amplitudes(j, i).real() << ','
          << series.amplitudes(j, i).imag();
    out << '\n';
  }
}

}  // namespace isb::ed
