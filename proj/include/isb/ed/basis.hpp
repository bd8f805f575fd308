#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace isb::ed {

/// Truncation of the chain Hilbert space kept by the brute-force solver.
struct TruncationSpec {
  enum class Boundary { Periodic, Open };

  int n_max = 4;     ///< max boson occupation per site, >= 1
  int sites = 4;     ///< unit cells, >= 2; even when periodic
  Boundary boundary = Boundary::Periodic;
  std::uint64_t max_amplitudes = 20'000'000;  ///< Hilbert dimension cap

  std::uint64_t dimension() const {
    std::uint64_t dim = 1;
    for (int i = 0; i < sites; ++i) {
      const std::uint64_t local = 2ull * (n_max + 1);
      if (dim > max_amplitudes * 4 / local + 1) return max_amplitudes + 1;
      dim *= local;
    }
    return dim;
  }

  void validate() const {
    if (n_max < 1) throw std::invalid_argument("TruncationSpec: n_max must be >= 1");
    if (sites < 2) throw std::invalid_argument("TruncationSpec: sites must be >= 2");
    if (boundary == Boundary::Periodic && sites % 2 != 0)
      throw std::invalid_argument(
          "TruncationSpec: periodic boundaries need an even chain "
          "(odd rings frustrate the staggered order)");
    if (dimension() > max_amplitudes)
      throw std::invalid_argument("TruncationSpec: Hilbert dimension exceeds the cap");
  }
};

/// Index layout of the truncated product basis.
///
/// Site-major: site 0 occupies the most significant digits. Within a site
/// the boson occupation is the inner (fastest) digit and the spin the outer
/// one, so the local index is  loc = s * (n_max + 1) + n  with s = 0 for
/// sz = +1 and s = 1 for sz = -1. Globally
///
///   index = sum_i loc_i * (2 (n_max + 1))^(sites - 1 - i).
///
/// This layout is the contract for binary eigenvector dumps.
class Basis {
 public:
  Basis(int n_max, int sites) : n_max_(n_max), sites_(sites) {
    if (n_max < 0 || sites < 1) throw std::invalid_argument("Basis: bad shape");
    local_ = 2 * (n_max + 1);
    strides_.resize(sites);
    std::uint64_t s = 1;
    for (int i = sites - 1; i >= 0; --i) {
      strides_[i] = s;
      s *= local_;
    }
    dim_ = s;
  }

  int n_max() const { return n_max_; }
  int sites() const { return sites_; }
  std::uint64_t dimension() const { return dim_; }
  std::uint64_t stride(int site) const { return strides_[site]; }
  std::uint64_t spin_stride(int site) const {
    return strides_[site] * std::uint64_t(n_max_ + 1);
  }

  int boson_at(std::uint64_t idx, int site) const {
    return int((idx / strides_[site]) % std::uint64_t(n_max_ + 1));
  }
  /// 0 encodes sz = +1, 1 encodes sz = -1.
  int spin_at(std::uint64_t idx, int site) const {
    return int((idx / spin_stride(site)) % 2ull);
  }

  void decode(std::uint64_t idx, int* spins, int* bosons) const {
    for (int i = sites_ - 1; i >= 0; --i) {
      const int loc = int(idx % local_);
      idx /= local_;
      bosons[i] = loc % (n_max_ + 1);
      spins[i] = loc / (n_max_ + 1);
    }
  }

  std::uint64_t encode(const int* spins, const int* bosons) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < sites_; ++i)
      idx = idx * local_ + std::uint64_t(spins[i] * (n_max_ + 1) + bosons[i]);
    return idx;
  }

 private:
  int n_max_;
  int sites_;
  int local_;
  std::uint64_t dim_ = 0;
  std::vector<std::uint64_t> strides_;
};

}  // namespace isb::ed
