#include "isb/ed/operator.hpp"

#include <cmath>

namespace isb::ed {

void RealLinearOperator::apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  Eigen::VectorXd part(x.size()), out(x.size());
  y.resize(x.size());
  part = x.real();
  apply(part, out);
  y.real() = out;
  part = x.imag();
  apply(part, out);
  y.imag() = out;
}

Eigen::MatrixXd RealLinearOperator::dense() const {
  const auto dim = dimension();
  if (dim > 8192)
    throw std::invalid_argument("dense(): dimension too large for dense assembly");
  Eigen::MatrixXd h(dim, dim);
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(dim), col(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    unit[j] = 1.0;
    apply(unit, col);
    h.col(j) = col;
    unit[j] = 0.0;
  }
  return h;
}

ChainOperator::ChainOperator(const ChainParams& p, const TruncationSpec& t)
    : params_(p),
      trunc_(t),
      basis_(t.n_max, t.sites),
      periodic_(t.boundary == TruncationSpec::Boundary::Periodic) {
  p.validate();
  if (t.sites < 2) throw std::invalid_argument("ChainOperator: sites must be >= 2");
  if (basis_.dimension() > t.max_amplitudes)
    throw std::invalid_argument("ChainOperator: Hilbert dimension exceeds the cap");

  sqrt_table_.resize(t.n_max + 2);
  for (int n = 0; n <= t.n_max + 1; ++n) sqrt_table_[n] = std::sqrt(double(n));

  const std::uint64_t dim = basis_.dimension();
  const int sites = t.sites;
  diagonal_.resize(dim);
  std::vector<int> spins(sites), bosons(sites);
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    basis_.decode(idx, spins.data(), bosons.data());
    double d = 0.0;
    for (int i = 0; i < sites; ++i) {
      d += 0.5 * params_.omega0 * (spins[i] == 0 ? 1.0 : -1.0);
      d += params_.omega * bosons[i];
    }
    diagonal_[idx] = d;
  }
}

void ChainOperator::apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  const std::uint64_t dim = basis_.dimension();
  const int sites = trunc_.sites;
  const int n_max = trunc_.n_max;
  y.resize(dim);
  y.array() = diagonal_.array() * x.array();

  std::vector<int> spins(sites), bosons(sites);
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const double amp = x[idx];
    if (amp == 0.0) continue;
    basis_.decode(idx, spins.data(), bosons.data());
    for (int i = 0; i < sites; ++i) {
      const std::uint64_t flipped = spins[i] == 0 ? idx + basis_.spin_stride(i)
                                                  : idx - basis_.spin_stride(i);
      // +g on the right boson of spin i, -g on the left one.
      for (int side = 0; side < 2; ++side) {
        int b = side == 0 ? i : i - 1;
        if (b < 0) {
          if (!periodic_) continue;
          b = sites - 1;
        }
        const double coeff = side == 0 ? params_.g : -params_.g;
        const std::uint64_t st = basis_.stride(b);
        const int n = bosons[b];
        if (n > 0) y[flipped - st] += coeff * sqrt_table_[n] * amp;
        if (n < n_max) y[flipped + st] += coeff * sqrt_table_[n + 1] * amp;
      }
    }
  }
}

ProbeOperator::ProbeOperator(const ChainOperator& chain, double omega_p, double g_p,
                             int n_probe)
    : chain_(chain), omega_p_(omega_p), g_p_(g_p), n_probe_(n_probe) {
  if (n_probe < 0) throw std::invalid_argument("ProbeOperator: n_probe must be >= 0");
  dim_ = chain.dimension() * std::uint64_t(n_probe + 1);
  if (dim_ > chain.truncation().max_amplitudes)
    throw std::invalid_argument("ProbeOperator: augmented dimension exceeds the cap");
}

void ProbeOperator::apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  const std::uint64_t dc = chain_.dimension();
  y.resize(dim_);
  Eigen::VectorXd block(dc), out(dc);
  for (int m = 0; m <= n_probe_; ++m) {
    block = x.segment(std::uint64_t(m) * dc, dc);
    chain_.apply(block, out);
    y.segment(std::uint64_t(m) * dc, dc) = out + (omega_p_ * m) * block;
  }
  if (g_p_ == 0.0) return;

  const Basis& b = chain_.basis();
  const std::uint64_t flip0 = b.spin_stride(0);
  for (int m = 0; m <= n_probe_; ++m) {
    const std::uint64_t base = std::uint64_t(m) * dc;
    for (std::uint64_t idx = 0; idx < dc; ++idx) {
      const double amp = x[base + idx];
      if (amp == 0.0) continue;
      const std::uint64_t partner =
          b.spin_at(idx, 0) == 0 ? idx + flip0 : idx - flip0;
      if (m > 0)
        y[base - dc + partner] += g_p_ * std::sqrt(double(m)) * amp;
      if (m < n_probe_)
        y[base + dc + partner] += g_p_ * std::sqrt(double(m + 1)) * amp;
    }
  }
}

}  // namespace isb::ed
