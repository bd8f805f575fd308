#include "isb/ed/lanczos.hpp"

#include <algorithm>
#include <random>

namespace isb::ed {

namespace {

Eigen::VectorXd random_unit(std::uint64_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (std::uint64_t i = 0; i < dim; ++i) v[i] = gauss(rng);
  v.normalize();
  return v;
}

// Orthogonalize w against the first m columns of basis, twice.
void reorthogonalize(const Eigen::MatrixXd& basis, int m, Eigen::VectorXd& w) {
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXd proj = basis.leftCols(m).transpose() * w;
    w.noalias() -= basis.leftCols(m) * proj;
  }
}

EigenSolveResult dense_path(const RealLinearOperator& op, int k) {
  const Eigen::MatrixXd h = op.dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  EigenSolveResult res;
  res.values = solver.eigenvalues().head(k);
  res.vectors = solver.eigenvectors().leftCols(k);
  res.norm_estimate = std::max(std::abs(solver.eigenvalues()[0]),
                               std::abs(solver.eigenvalues()[h.rows() - 1]));
  res.residuals = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < k; ++i)
    res.residuals[i] =
        (h * res.vectors.col(i) - res.values[i] * res.vectors.col(i)).norm();
  res.converged = true;
  return res;
}

}  // namespace

EigenSolveResult lowest_eigenpairs(const RealLinearOperator& op, int k,
                                   const LanczosOptions& opts) {
  const std::uint64_t dim = op.dimension();
  if (k < 1 || k > 20) throw std::invalid_argument("lowest_eigenpairs: k in [1, 20]");
  k = std::min<std::uint64_t>(k, dim);

  if (dim <= std::uint64_t(opts.dense_cutoff)) return dense_path(op, k);

  const int cap = std::min<std::uint64_t>(opts.krylov_cap, dim);
  std::mt19937_64 rng(opts.seed);

  // The basis grows in blocks; typical runs stop well before the cap.
  const int block = 64;
  Eigen::MatrixXd basis(dim, std::min(cap, block));
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(cap);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(cap);  // beta[j] couples j and j+1

  basis.col(0) = random_unit(dim, rng);
  Eigen::VectorXd w(dim);

  EigenSolveResult res;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri_solver;
  int m = 0;
  for (int j = 0; j < cap; ++j) {
    m = j + 1;
    op.apply(basis.col(j), w);
    alpha[j] = basis.col(j).dot(w);
    reorthogonalize(basis, m, w);
    double b = w.norm();
    res.norm_estimate = std::max(res.norm_estimate, std::abs(alpha[j]) + b);

    const bool last = j + 1 == cap;
    const bool check = last || ((m >= k) && (m % 5 == 0));
    if (check) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
      }
      tri_solver.compute(t);
      const double scale = std::max(
          {std::abs(tri_solver.eigenvalues()[0]),
           std::abs(tri_solver.eigenvalues()[m - 1]), 1e-300});
      bool done = m >= k;
      for (int i = 0; i < k && done; ++i) {
        const double est = b * std::abs(tri_solver.eigenvectors()(m - 1, i));
        if (est > opts.tolerance * scale) done = false;
      }
      if (done || last) {
        res.iterations = m;
        res.values = tri_solver.eigenvalues().head(k);
        res.vectors.noalias() =
            basis.leftCols(m) * tri_solver.eigenvectors().leftCols(k);
        res.residuals.resize(k);
        for (int i = 0; i < k; ++i) {
          res.vectors.col(i).normalize();
          op.apply(res.vectors.col(i), w);
          res.residuals[i] = (w - res.values[i] * res.vectors.col(i)).norm();
        }
        const double target =
            opts.tolerance * std::max(res.norm_estimate, 1e-300);
        res.converged = (res.residuals.array() <= 10.0 * target).all();
        if (!res.converged)
          res.message = "Lanczos hit the Krylov cap before the residual target";
        return res;
      }
    }

    if (!last) {
      if (m + 1 > basis.cols())
        basis.conservativeResize(Eigen::NoChange, std::min(cap, m + block));
      if (b < 1e-13 * std::max(res.norm_estimate, 1.0)) {
        // Invariant subspace exhausted: inject a fresh direction and
        // decouple it in the tridiagonal matrix.
        w = random_unit(dim, rng);
        reorthogonalize(basis, m, w);
        const double nw = w.norm();
        if (nw < 0.5) {  // basis nearly spans the space
          w = random_unit(dim, rng);
          reorthogonalize(basis, m, w);
        }
        w.normalize();
        beta[j] = 0.0;
        basis.col(j + 1) = w;
      } else {
        beta[j] = b;
        basis.col(j + 1) = w / b;
      }
    }
  }
  res.converged = false;
  res.message = "Lanczos did not converge";
  return res;
}

}  // namespace isb::ed
