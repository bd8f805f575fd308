#include "isb/tim.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support/dense_spin_chain.hpp"
#include "support/quadrature.hpp"

using namespace isb;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent oracle for the Bogoliubov sector: the Hermitian 2x2 block in
// the Nambu basis (c_q, c+_{-q}).
Eigen::Matrix2cd bdg_block(const tim::TimParams& p, double qd) {
  const double a = 2.0 * (p.J * std::cos(qd) + p.h_t);
  const std::complex<double> b(0.0, -2.0 * p.J * std::sin(qd));
  Eigen::Matrix2cd m;
  m << a, b, std::conj(b), -a;
  return m;
}

// Thermodynamic ground energy straight from the dispersion integral.
double energy_quadrature(const tim::TimParams& p) {
  return -isbtest::integrate(
             [&](double q) { return tim::dispersion(p, q); }, 0.0, 2.0 * kPi,
             1e-14) /
         (4.0 * kPi);
}

}  // namespace

TEST_CASE("dispersion at the stated anchor points") {
  tim::TimParams p{0.5, 0.25, 0.0};
  CHECK(tim::dispersion(p, 0.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(tim::dispersion(p, kPi) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(tim::dispersion(p, kPi / 2) ==
        doctest::Approx(2.0 * std::sqrt(0.25 + 0.0625)).epsilon(1e-14));
}

TEST_CASE("dispersion is invariant under J -> -J with qd -> pi - qd") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> draw(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    tim::TimParams p{draw(rng) * 2 - 1, draw(rng), 0.0};
    tim::TimParams flipped{-p.J, p.h_t, 0.0};
    const double qd = draw(rng) * 2 * kPi;
    CHECK(tim::dispersion(p, qd) ==
          doctest::Approx(tim::dispersion(flipped, kPi - qd)).epsilon(1e-12));
  }
}

TEST_CASE("dispersion equals the positive BdG eigenvalue on a 256-point grid") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    tim::TimParams p{draw(rng), std::abs(draw(rng)), 0.0};
    for (int i = 0; i < 256; ++i) {
      const double qd = 2 * kPi * i / 256;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(bdg_block(p, qd));
      CHECK(std::abs(tim::dispersion(p, qd) - solver.eigenvalues()[1]) <= 1e-10);
    }
  }
}

TEST_CASE("bogoliubov pair solves the BdG eigenproblem") {
  // The eigenvector convention: (u, v*) is the positive-energy eigenvector.
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> draw(-1.0, 1.0);
  for (int rep = 0; rep < 400; ++rep) {
    tim::TimParams p{draw(rng), std::abs(draw(rng)), 0.0};
    const double qd = (draw(rng) + 1.0) * kPi;
    const auto pair = tim::bogoliubov(p, qd);
    if (pair.gapless) continue;
    const double eps = tim::dispersion(p, qd);
    Eigen::Vector2cd vec(pair.u, std::conj(pair.v));
    const Eigen::Vector2cd residual = bdg_block(p, qd) * vec - eps * vec;
    CHECK(residual.norm() <= 1e-10);
    CHECK(std::abs(std::norm(pair.u) + std::norm(pair.v) - 1.0) <= 1e-12);
    CHECK(pair.u.imag() == 0.0);
    CHECK(pair.u.real() >= 0.0);
  }
}

TEST_CASE("bogoliubov: free fermions at J = 0") {
  tim::TimParams p{0.0, 0.7, 0.0};
  for (double qd : {0.0, 0.3, kPi / 2, kPi, 5.0}) {
    const auto pair = tim::bogoliubov(p, qd);
    CHECK(pair.u == std::complex<double>(1.0, 0.0));
    CHECK(pair.v == std::complex<double>(0.0, 0.0));
  }
}

TEST_CASE("bogoliubov: h_t = 0 endpoints stay on the BdG eigenvector") {
  // At h_t = 0 and qd = 0 the pairing is zero and the block is diagonal;
  // the convention pins (u, v) = (1, 0) for J > 0. The generic point at
  // qd = pi/3 is checked against the eigenproblem directly.
  tim::TimParams p{0.5, 0.0, 0.0};
  const auto at_zero = tim::bogoliubov(p, 0.0);
  CHECK(at_zero.u == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(at_zero.v) == 0.0);

  tim::TimParams generic{0.5, 0.25, 0.0};
  const auto pair = tim::bogoliubov(generic, kPi / 3);
  Eigen::Vector2cd vec(pair.u, std::conj(pair.v));
  const double eps = tim::dispersion(generic, kPi / 3);
  CHECK((bdg_block(generic, kPi / 3) * vec - eps * vec).norm() <= 1e-12);
}

TEST_CASE("bogoliubov flags gapless momenta with the fixed tie-break") {
  tim::TimParams critical{0.5, 0.5, 0.0};  // gap closes at qd = pi
  const auto pair = tim::bogoliubov(critical, kPi);
  CHECK(pair.gapless);
  CHECK(pair.u.real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(pair.v.imag() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("ground energy per site: classical and free-spin limits") {
  CHECK(tim::ground_energy_per_site({0.7, 0.0, 0.0}) ==
        doctest::Approx(-0.7).epsilon(1e-14));
  CHECK(tim::ground_energy_per_site({-0.7, 0.0, 0.0}) ==
        doctest::Approx(-0.7).epsilon(1e-14));
  CHECK(tim::ground_energy_per_site({0.0, 0.4, 0.0}) ==
        doctest::Approx(-0.4).epsilon(1e-14));
}

TEST_CASE("ground energy per site at criticality: -4|J|/pi") {
  const double j = 0.65;
  // Oracle: quadrature of the dispersion integral at lambda = 1.
  tim::TimParams p{j, j, 0.0};
  const double oracle = energy_quadrature(p);
  CHECK(oracle == doctest::Approx(-4.0 * j / kPi).epsilon(1e-12));
  CHECK(tim::ground_energy_per_site(p) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("ground energy per site matches the dispersion quadrature generically") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> draw(0.05, 1.5);
  for (int rep = 0; rep < 25; ++rep) {
    tim::TimParams p{(rep % 2 ? -1 : 1) * draw(rng), draw(rng), 0.0};
    CHECK(std::abs(tim::ground_energy_per_site(p) - energy_quadrature(p)) <= 1e-11);
  }
}

TEST_CASE("finite ground energy: exact limits") {
  for (int n : {2, 4, 8, 16}) {
    CHECK(tim::finite_ground_energy({0.0, 0.3, 0.0}, n) ==
          doctest::Approx(-0.3 * n).epsilon(1e-13));
    CHECK(tim::finite_ground_energy({0.5, 0.0, 0.0}, n) ==
          doctest::Approx(-0.5 * n).epsilon(1e-13));
    CHECK(tim::finite_ground_energy({-0.5, 0.0, 0.0}, n) ==
          doctest::Approx(-0.5 * n).epsilon(1e-13));
  }
}

TEST_CASE("finite ground energy rejects odd chains") {
  CHECK_THROWS_AS(tim::finite_ground_energy({0.5, 0.25, 0.0}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(tim::finite_ground_energy({0.5, 0.25, 0.0}, 0),
                  std::invalid_argument);
}

TEST_CASE("finite ground energy matches dense diagonalization at N = 8") {
  // Dual route: free-fermion momentum sum vs a dense 256-dim solve.
  for (const auto& [J, h] : std::vector<std::pair<double, double>>{
           {0.5, 0.25}, {0.3, 0.6}, {-0.4, 0.2}, {0.18, 0.0872095}}) {
    const double fermion = tim::finite_ground_energy({J, h, 0.0}, 8);
    const double dense = isbtest::dense_spin_ground(8, J, h, 0.0).energy;
    CHECK(fermion == doctest::Approx(dense).epsilon(1e-12));
  }
}

TEST_CASE("finite-size energies approach the thermodynamic value monotonically") {
  // The lower bound e_N/N >= e_inf can be undershot, but only at O(1/N).
  tim::TimParams p{0.5, 0.25, 0.0};
  const double e_inf = tim::ground_energy_per_site(p);
  double prev_gap = -1.0;
  for (int n : {8, 16, 32, 64}) {
    const double gap = std::abs(tim::finite_ground_energy(p, n) / n - e_inf);
    CHECK(gap <= 1.0 / n);  // O(1/N) budget with C = 1 fits comfortably
    if (prev_gap >= 0.0) CHECK(gap <= prev_gap + 1e-12);
    prev_gap = gap;
    CHECK(tim::finite_ground_energy(p, n) / n >= e_inf - 1.0 / n);
  }
}

TEST_CASE("magnetization anchors") {
  CHECK(tim::magnetization(0.0) == 1.0);
  CHECK(tim::magnetization(1.0) == 0.0);
  CHECK(tim::magnetization(1.5) == 0.0);
  CHECK(tim::magnetization(std::numeric_limits<double>::infinity()) == 0.0);
  CHECK(tim::magnetization(0.6) == doctest::Approx(0.94574161).epsilon(1e-7));
  CHECK(tim::magnetization(0.6) ==
        doctest::Approx(std::pow(0.64, 0.125)).epsilon(1e-15));
  CHECK_THROWS_AS(tim::magnetization(-0.1), std::domain_error);
  CHECK_THROWS_AS(tim::magnetization(std::nan("")), std::domain_error);
}

TEST_CASE("magnetization is continuous at the critical point") {
  CHECK(tim::magnetization(1.0 - 1e-12) <= 4e-2);
  CHECK(tim::magnetization(1.0 - 1e-12) > 0.0);
}

TEST_CASE("critical exponent 1/8 from a log-log fit") {
  // Least squares of log m against log(1 - lambda) on [0.99, 0.9999].
  std::vector<double> xs, ys;
  for (int i = 0; i <= 200; ++i) {
    const double lambda = 0.99 + (0.9999 - 0.99) * i / 200.0;
    xs.push_back(std::log(1.0 - lambda));
    ys.push_back(std::log(tim::magnetization(lambda)));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(std::abs(slope - 0.125) <= 1e-3);
}

TEST_CASE("gap closes exactly at lambda = 1") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> draw(0.05, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const double j = draw(rng);
    const double lambda = 2.0 * draw(rng);
    tim::TimParams p{j, j * lambda, 0.0};
    // The minimum sits at the zone edge.
    double min_eps = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 512; ++i)
      min_eps = std::min(min_eps, tim::dispersion(p, 2 * kPi * i / 512));
    CHECK(min_eps >= 2.0 * j * std::abs(1.0 - lambda) - 1e-12);
    CHECK(tim::dispersion(p, kPi) ==
          doctest::Approx(2.0 * j * std::abs(1.0 - lambda)).epsilon(1e-12));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(tim::dispersion({std::nan(""), 0.1, 0.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(tim::dispersion({0.1, -0.1, 0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(tim::ground_energy_per_site({0.1, 0.1, 0.2}),
                  std::invalid_argument);
}
