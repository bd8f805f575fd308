#include "isb/ansatz_gs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "isb/errors.hpp"
#include "isb/minimize.hpp"
#include "isb/specfun.hpp"

namespace isb::gs {

namespace {

double lambda_of(const tim::TimParams& t) {
  if (t.J == 0.0) return std::numeric_limits<double>::infinity();
  return t.h_t / std::abs(t.J);
}

/// Pfeuty ground energy per site of the transverse-field part, with the
/// J = 0 limit folded in (the symmetric form handles it without branches).
double pfeuty_term(const tim::TimParams& t) {
  tim::TimParams transverse{t.J, t.h_t, 0.0};
  return tim::ground_energy_per_site(transverse);
}

VariationalSolution solved_at(const ChainParams& p, AnsatzKind kind, double f,
                              double alpha, double energy_per_site) {
  const tim::TimParams t =
      kind == AnsatzKind::LangFirsov ? lf_effective(p) : sh_effective(p, f, alpha);
  const double lambda = lambda_of(t);
  const double m = tim::magnetization(lambda);
  VariationalSolution s;
  s.kind = kind;
  s.f_star = f;
  s.alpha_star = std::abs(alpha);
  s.energy_per_site = energy_per_site;
  s.lambda = lambda;
  s.spin_magnetization = m;
  s.boson_polarization = std::abs(2.0 * p.g / p.omega) * m;
  s.ordered = lambda < 1.0;
  return s;
}

}  // namespace

tim::TimParams lf_effective(const ChainParams& p) {
  p.validate();
  const double x = p.g / p.omega;
  return {2.0 * p.g * x, 0.5 * p.omega0 * std::exp(-4.0 * x * x), 0.0};
}

VariationalSolution lf_solve(const ChainParams& p) {
  p.validate();
  const tim::TimParams t = lf_effective(p);
  const double energy = -2.0 * p.g * p.g / p.omega + pfeuty_term(t);
  return solved_at(p, AnsatzKind::LangFirsov, p.g, 0.0, energy);
}

double lf_critical_g(double omega0, double omega) {
  ChainParams{omega0, omega, 0.0}.validate();
  if (omega0 == 0.0) return 0.0;
  // 2 g^2/omega grows, (omega0/2) exp(-4 g^2/omega^2) shrinks: unique root.
  const auto excess = [&](double g) {
    const double x = g / omega;
    return 2.0 * g * g / omega - 0.5 * omega0 * std::exp(-4.0 * x * x);
  };
  double hi = std::max(omega, std::sqrt(omega * omega0));
  while (excess(hi) <= 0.0) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

tim::TimParams sh_effective(const ChainParams& p, double f, double alpha) {
  p.validate();
  if (!std::isfinite(f) || !std::isfinite(alpha))
    throw std::invalid_argument("sh_effective: f and alpha must be finite");
  const double x = f / p.omega;
  return {2.0 * f * (f - 2.0 * p.g) / p.omega,
          0.5 * p.omega0 * std::exp(-4.0 * x * x), 4.0 * alpha * (p.g - f)};
}

double sh_energy(const ChainParams& p, double f, double alpha) {
  const tim::TimParams t = sh_effective(p, f, alpha);
  const double m = tim::magnetization(lambda_of(t));
  return t.J + p.omega * alpha * alpha + pfeuty_term(t) + t.h_l * m;
}

VariationalSolution sh_solve(const ChainParams& p) {
  p.validate();
  // Wild simplex excursions may overflow the couplings; a huge penalty
  // steers the search back without aborting it.
  const auto energy = [&](const Eigen::VectorXd& x) {
    if (!std::isfinite(x[0]) || !std::isfinite(x[1])) return 1e100;
    try {
      const double e = sh_energy(p, x[0], x[1]);
      return std::isfinite(e) ? e : 1e100;
    } catch (const std::exception&) {
      return 1e100;
    }
  };

  const double scale = std::max({p.omega, p.omega0, std::abs(p.g)});
  minimize::NelderMeadOptions opts;
  opts.diameter_tol = 1e-10 * scale;
  opts.value_tol = 1e-13;
  opts.max_iterations = 5000;

  // f lives on the coupling scale, alpha on the displacement scale 2g/omega.
  Eigen::VectorXd steps(2);
  steps << (p.g != 0.0 ? 0.1 * std::abs(p.g)
                       : 0.02 * std::max(p.omega0, 0.01 * p.omega)),
      0.1 * (1.0 + 2.0 * std::abs(p.g) / p.omega);

  Eigen::VectorXd from_lf(2), from_zero(2);
  from_lf << p.g, 0.0;
  from_zero << 0.0, 0.0;

  const auto run_a = minimize::nelder_mead(energy, from_lf, steps, opts);
  const auto run_b = minimize::nelder_mead(energy, from_zero, steps, opts);
  const auto& best = run_b.value < run_a.value ? run_b : run_a;

  VariationalSolution s =
      solved_at(p, AnsatzKind::SilbeyHarris, best.x[0], best.x[1], best.value);
  if (!run_a.converged && !run_b.converged) {
    s.converged = false;
    s.message = "minimization did not converge; best iterate reported";
  }
  return s;
}

double sh_critical_g(double omega0, double omega) {
  ChainParams{omega0, omega, 0.0}.validate();
  if (omega0 == 0.0) return 0.0;
  const auto lambda_at = [&](double g) {
    const VariationalSolution s = sh_solve({omega0, omega, g});
    if (!s.converged) throw SolverError("sh_critical_g: sh_solve did not converge");
    return s.lambda;
  };
  // Coarse upward scan for the first crossing of lambda = 1, then bisect.
  double lo = 0.0;
  double hi = std::max(lf_critical_g(omega0, omega), 1e-3 * omega);
  while (lambda_at(hi) >= 1.0) {
    lo = hi;
    hi *= 1.3;
    if (hi > 1e6 * std::max(omega, omega0))
      throw SolverError("sh_critical_g: no ordered phase found");
  }
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    (lambda_at(mid) < 1.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<SweepRow> phase_diagram(const SweepSpec& spec, int workers) {
  spec.a.validate();
  spec.b.validate();
  spec.g.validate();
  if (workers < 1) throw std::invalid_argument("phase_diagram: workers >= 1");

  const long total =
      long(spec.a.count) * long(spec.b.count) * long(spec.g.count);
  if (total > 1'000'000)
    throw std::invalid_argument("phase_diagram: grid exceeds 10^6 points");

  std::vector<SweepRow> rows(total);
  const auto compute = [&](long idx) {
    SweepRow& row = rows[idx];
    const int ia = int(idx / (long(spec.b.count) * spec.g.count));
    const int ib = int((idx / spec.g.count) % spec.b.count);
    const int ig = int(idx % spec.g.count);
    if (spec.mode == SweepMode::DeltaTheta) {
      row.delta = spec.a.at(ia);
      row.theta = spec.b.at(ib);
      row.omega = row.delta * std::cos(row.theta);
      row.omega0 = row.delta * std::sin(row.theta);
    } else {
      row.omega = spec.a.at(ia);
      row.omega0 = spec.b.at(ib);
      row.delta = std::hypot(row.omega, row.omega0);
      row.theta = std::atan2(row.omega0, row.omega);
    }
    row.g = spec.g.at(ig);
    try {
      const ChainParams p{row.omega0, row.omega, row.g};
      row.lf = lf_solve(p);
      row.sh = sh_solve(p);
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
  };

  if (workers == 1) {
    for (long i = 0; i < total; ++i) compute(i);
  } else {
    // Static round-robin assignment into preallocated slots keeps the
    // result independent of the worker count.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (long i = w; i < total; i += workers) compute(i);
      });
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace isb::gs
