#pragma once

#include <Eigen/Dense>
#include <complex>

#include "isb/chain.hpp"
#include "isb/ed/basis.hpp"

namespace isb::ed {

/// Real symmetric linear operator applied matrix-free.
class RealLinearOperator {
 public:
  virtual ~RealLinearOperator() = default;
  virtual std::uint64_t dimension() const = 0;
  virtual void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const = 0;

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y;
    apply(x, y);
    return y;
  }
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  /// Dense assembly for small dimensions (column-by-column).
  Eigen::MatrixXd dense() const;
};

/// Matrix-free chain Hamiltonian in the truncated product basis:
/// spin terms (omega0/2) sz_i, boson terms omega n_i, and the staggered
/// coupling g sx_i (a_i + a_i^+) - g sx_i (a_{i-1} + a_{i-1}^+).
/// Application cost O(dim * sites).
class ChainOperator : public RealLinearOperator {
 public:
  ChainOperator(const ChainParams& p, const TruncationSpec& t);

  std::uint64_t dimension() const override { return basis_.dimension(); }
  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const override;
  using RealLinearOperator::apply;

  const Basis& basis() const { return basis_; }
  const ChainParams& params() const { return params_; }
  const TruncationSpec& truncation() const { return trunc_; }

 private:
  ChainParams params_;
  TruncationSpec trunc_;
  Basis basis_;
  Eigen::VectorXd diagonal_;
  std::vector<double> sqrt_table_;
  bool periodic_ = true;
};

/// Chain plus a single probe resonator coupled as g_p (a_p + a_p^+) sx_0.
/// The probe occupation is the most significant digit:
/// index = m * dim_chain + chain_index, m = 0 .. n_probe.
class ProbeOperator : public RealLinearOperator {
 public:
  ProbeOperator(const ChainOperator& chain, double omega_p, double g_p, int n_probe);

  std::uint64_t dimension() const override { return dim_; }
  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const override;
  using RealLinearOperator::apply;

  const ChainOperator& chain() const { return chain_; }
  int n_probe() const { return n_probe_; }

 private:
  const ChainOperator& chain_;
  double omega_p_;
  double g_p_;
  int n_probe_;
  std::uint64_t dim_;
};

/// y = sx_site x
template <typename Scalar>
void apply_sigma_x(const Basis& b, int site,
                   const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
                   Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) {
  y.resize(x.size());
  const std::uint64_t flip = b.spin_stride(site);
  const std::uint64_t dim = b.dimension();
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const std::uint64_t partner =
        b.spin_at(idx, site) == 0 ? idx + flip : idx - flip;
    y[partner] = x[idx];
  }
}

/// y = a_site x
template <typename Scalar>
void apply_annihilation(const Basis& b, int site,
                        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
                        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) {
  y.setZero(x.size());
  const std::uint64_t st = b.stride(site);
  const std::uint64_t dim = b.dimension();
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const int n = b.boson_at(idx, site);
    if (n > 0) y[idx - st] += std::sqrt(double(n)) * x[idx];
  }
}

/// y = a^+_site x
template <typename Scalar>
void apply_creation(const Basis& b, int site,
                    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
                    Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) {
  y.setZero(x.size());
  const std::uint64_t st = b.stride(site);
  const std::uint64_t dim = b.dimension();
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const int n = b.boson_at(idx, site);
    if (n < b.n_max()) y[idx + st] += std::sqrt(double(n + 1)) * x[idx];
  }
}

}  // namespace isb::ed
