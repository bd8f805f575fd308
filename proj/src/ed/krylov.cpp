#include "isb/ed/krylov.hpp"

#include <cmath>
#include <complex>

#include "isb/errors.hpp"

namespace isb::ed {

namespace {

using Complex = std::complex<double>;

/// One Lanczos exponential step. Returns the local error estimate, or a
/// negative value to signal "reject and halve".
double try_step(const RealLinearOperator& op, Eigen::VectorXcd& psi, double h,
                int m_max, double budget) {
  const double norm = psi.norm();
  if (norm == 0.0) return 0.0;

  const std::uint64_t dim = op.dimension();
  const int m_cap = int(std::min<std::uint64_t>(m_max, dim));
  Eigen::MatrixXcd basis(dim, m_cap);
  Eigen::VectorXd alpha(m_cap), beta(m_cap);
  basis.col(0) = psi / norm;

  int m = m_cap;
  bool invariant = false;
  Eigen::VectorXcd w(dim);
  for (int j = 0; j < m_cap; ++j) {
    op.apply(Eigen::VectorXcd(basis.col(j)), w);
    alpha[j] = basis.col(j).dot(w).real();
    w -= alpha[j] * basis.col(j);
    if (j > 0) w -= beta[j - 1] * basis.col(j - 1);
    for (int pass = 0; pass < 2; ++pass)
      w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).adjoint() * w);
    const double b = w.norm();
    if (j + 1 == m_cap) {
      beta[j] = b;
      break;
    }
    if (b < 1e-14 * (std::abs(alpha[j]) + 1.0)) {
      m = j + 1;
      invariant = true;  // propagation exact inside the spanned subspace
      break;
    }
    beta[j] = b;
    basis.col(j + 1) = w / b;
  }

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    t(i, i) = alpha[i];
    if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  Eigen::VectorXcd phases(m);
  for (int i = 0; i < m; ++i)
    phases[i] = std::exp(Complex(0.0, -h * solver.eigenvalues()[i]));
  const Eigen::VectorXcd u = solver.eigenvectors() *
                             (phases.array() *
                              solver.eigenvectors().row(0).transpose().array().cast<Complex>())
                                 .matrix();

  double err = 0.0;
  if (!invariant) err = beta[m - 1] * std::abs(u[m - 1]) * std::abs(h);
  if (err > budget) return -1.0;

  psi = norm * (basis.leftCols(m) * u);
  return err;
}

}  // namespace

void propagate(const RealLinearOperator& op, Eigen::VectorXcd& psi, double dt,
               const KrylovOptions& opts) {
  if (dt == 0.0) return;
  const double total = std::abs(dt);
  const double sign = dt < 0.0 ? -1.0 : 1.0;
  double done = 0.0;
  double h = total;
  double spent = 0.0;
  int rejections = 0;
  while (done < total) {
    h = std::min(h, total - done);
    const double budget =
        std::max((opts.tolerance - spent) * h / (total - done), 1e-16);
    const double err = try_step(op, psi, sign * h, opts.subspace, budget);
    if (err < 0.0) {
      h *= 0.5;
      if (++rejections > 60)
        throw SolverError("krylov propagate: step size underflow");
      continue;
    }
    spent += err;
    done += h;
    h *= 1.4;  // gentle growth after an accepted step
  }
}

}  // namespace isb::ed
