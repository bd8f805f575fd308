#include "isb/ansatz_gs.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "isb/specfun.hpp"
#include "isb/tim.hpp"

using namespace isb;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("lf_effective: anchors and homogeneity") {
  const auto zero = gs::lf_effective({1.0, 1.0, 0.0});
  CHECK(zero.J == 0.0);
  CHECK(zero.h_t == 0.5);
  CHECK(zero.h_l == 0.0);

  const auto t = gs::lf_effective({1.0, 1.0, 0.6});
  CHECK(t.J == doctest::Approx(0.72).epsilon(1e-15));
  CHECK(t.h_t == doctest::Approx(0.5 * std::exp(-1.44)).epsilon(1e-15));
  CHECK(t.h_t == doctest::Approx(0.11847).epsilon(1e-4));

  for (double s : {0.1, 10.0}) {
    const auto scaled = gs::lf_effective({s * 1.0, s * 1.0, s * 0.6});
    CHECK(scaled.J == doctest::Approx(s * t.J).epsilon(1e-12));
    CHECK(scaled.h_t == doctest::Approx(s * t.h_t).epsilon(1e-12));
  }
}

TEST_CASE("lf_solve: omega0 = 0 is the fully ordered closed form") {
  const ChainParams p{0.0, 1.3, 0.45};
  const auto s = gs::lf_solve(p);
  CHECK(s.lambda == 0.0);
  CHECK(s.spin_magnetization == 1.0);
  CHECK(s.boson_polarization == doctest::Approx(2.0 * 0.45 / 1.3).epsilon(1e-14));
  CHECK(s.energy_per_site ==
        doctest::Approx(-4.0 * 0.45 * 0.45 / 1.3).epsilon(1e-14));
  CHECK(s.ordered);
  CHECK(s.f_star == 0.45);
  CHECK(s.alpha_star == 0.0);
}

TEST_CASE("lf_solve: decoupled chain is a paramagnet") {
  const auto s = gs::lf_solve({0.8, 1.0, 0.0});
  CHECK(s.energy_per_site == doctest::Approx(-0.4).epsilon(1e-14));
  CHECK(s.spin_magnetization == 0.0);
  CHECK(s.boson_polarization == 0.0);
  CHECK(!s.ordered);
  CHECK(std::isinf(s.lambda));
}

TEST_CASE("lf_solve at the quoted benchmark point") {
  const auto s = gs::lf_solve({1.0, 1.0, 0.6});
  CHECK(s.lambda == doctest::Approx(0.16454).epsilon(5e-5));
  CHECK(s.spin_magnetization == doctest::Approx(0.99660).epsilon(5e-5));
  CHECK(s.ordered);
}

TEST_CASE("lf_critical_g: anchors, uniqueness bracket and homogeneity") {
  CHECK(gs::lf_critical_g(0.0, 1.0) == 0.0);

  // Independent bisection oracle on exp(-4x) = 4x in x = g^2 (omega = omega0 = 1).
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::exp(-4.0 * mid) < 4.0 * mid ? hi : lo) = mid;
  }
  const double oracle = std::sqrt(0.5 * (lo + hi));
  const double gc = gs::lf_critical_g(1.0, 1.0);
  CHECK(gc == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(gc == doctest::Approx(0.3768).epsilon(2e-3));  // coarse literature figure

  for (double s : {0.1, 10.0})
    CHECK(gs::lf_critical_g(s, s) == doctest::Approx(s * gc).epsilon(1e-9));

  // On the line: h_t equals J.
  const auto t = gs::lf_effective({1.0, 1.0, gc});
  CHECK(t.h_t == doctest::Approx(t.J).epsilon(1e-9));
}

TEST_CASE("sh_effective anchors") {
  const ChainParams p{1.0, 1.0, 0.5};
  const auto at_g = gs::sh_effective(p, 0.5, 0.3);
  CHECK(at_g.J == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(at_g.h_l == 0.0);

  const auto at_zero = gs::sh_effective(p, 0.0, 0.3);
  CHECK(at_zero.J == 0.0);
  CHECK(at_zero.h_t == 0.5);
  CHECK(at_zero.h_l == doctest::Approx(4.0 * 0.3 * 0.5).epsilon(1e-14));

  const auto generic = gs::sh_effective(p, 0.3, 0.2);
  CHECK(generic.J == doctest::Approx(-0.42).epsilon(1e-14));
  CHECK(generic.h_l == doctest::Approx(0.16).epsilon(1e-14));
}

TEST_CASE("sh_energy reduces to the Lang-Firsov energy at (f = g, alpha = 0)") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> draw(0.05, 2.0);
  for (int rep = 0; rep < 10000; ++rep) {
    const ChainParams p{draw(rng), draw(rng), draw(rng) - 1.0};
    const double lf = gs::lf_solve(p).energy_per_site;
    const double sh = gs::sh_energy(p, p.g, 0.0);
    CHECK(std::abs(lf - sh) <= 1e-12 * std::max(1.0, std::abs(lf)));
  }
}

TEST_CASE("sh_energy limits") {
  CHECK(gs::sh_energy({0.9, 1.0, 0.0}, 0.0, 0.0) ==
        doctest::Approx(-0.45).epsilon(1e-14));
}

TEST_CASE("sh_solve: decoupled chain") {
  const auto s = gs::sh_solve({0.8, 1.0, 0.0});
  CHECK(s.converged);
  CHECK(std::abs(s.f_star) <= 1e-6);
  CHECK(std::abs(s.alpha_star) <= 1e-6);
  CHECK(s.energy_per_site == doctest::Approx(-0.4).epsilon(1e-10));
}

TEST_CASE("sh_solve approaches the Lang-Firsov displacement at large omega") {
  // The displacement correction scales like g omega0 / omega.
  const double g = 0.5, omega0 = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (double omega : {10.0, 100.0, 1000.0}) {
    const auto s = gs::sh_solve({omega0, omega, g});
    REQUIRE(s.converged);
    const double miss = std::abs(s.f_star - g) / g;
    CHECK(miss < prev);
    prev = miss;
  }
  const auto s = gs::sh_solve({omega0, 5000.0, g});
  CHECK(std::abs(s.f_star - g) <= 1e-3 * g);
}

TEST_CASE("sh_solve at omega = 10 pins the displacement correction") {
  // Stationarity balances (4/omega)(f - g) against h_t'(f), giving
  // f - g ~ -2 g h_t / omega; regression value frozen from the solver.
  const auto s = gs::sh_solve({1.0, 10.0, 0.5});
  REQUIRE(s.converged);
  CHECK(s.f_star == doctest::Approx(0.5 - 2.0 * 0.5 * 0.5 / 10.0).epsilon(0.05));
  CHECK(s.alpha_star <= 1e-8);  // paramagnetic at these couplings
}

TEST_CASE("sh_solve: small omega favours a reduced displacement") {
  const double omega = 0.05, omega0 = 1.0;
  const double gc = gs::lf_critical_g(omega0, omega);
  const auto s = gs::sh_solve({omega0, omega, gc});
  REQUIRE(s.converged);
  CHECK(std::abs(s.f_star) < std::abs(gc - s.f_star));  // closer to 0 than to g
}

TEST_CASE("both solvers are scale covariant") {
  const ChainParams base{0.7, 1.1, 0.45};
  const auto lf0 = gs::lf_solve(base);
  const auto sh0 = gs::sh_solve(base);
  for (double s : {0.1, 10.0}) {
    const ChainParams scaled{s * base.omega0, s * base.omega, s * base.g};
    const auto lf1 = gs::lf_solve(scaled);
    const auto sh1 = gs::sh_solve(scaled);
    CHECK(lf1.energy_per_site ==
          doctest::Approx(s * lf0.energy_per_site).epsilon(1e-9));
    CHECK(lf1.lambda == doctest::Approx(lf0.lambda).epsilon(1e-9));
    CHECK(lf1.spin_magnetization ==
          doctest::Approx(lf0.spin_magnetization).epsilon(1e-9));
    CHECK(sh1.energy_per_site ==
          doctest::Approx(s * sh0.energy_per_site).epsilon(1e-9));
    CHECK(sh1.f_star / scaled.g == doctest::Approx(sh0.f_star / base.g).epsilon(1e-6));
    CHECK(sh1.alpha_star == doctest::Approx(sh0.alpha_star).epsilon(1e-6));
  }
}

TEST_CASE("Lang-Firsov order parameters keep their fixed ratio") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> draw(0.05, 1.5);
  for (int rep = 0; rep < 200; ++rep) {
    const ChainParams p{draw(rng), draw(rng), draw(rng)};
    const auto s = gs::lf_solve(p);
    CHECK(s.boson_polarization ==
          doctest::Approx(std::abs(2.0 * p.g / p.omega) * s.spin_magnetization)
              .epsilon(1e-14));
  }
}

TEST_CASE("sh_critical_g: anchors and the small-omega ordering") {
  CHECK(gs::sh_critical_g(0.0, 1.0) == 0.0);

  // Large omega: both ansaetze live in the Lang-Firsov regime.
  const double lf_c = gs::lf_critical_g(1.0, 10.0);
  const double sh_c = gs::sh_critical_g(1.0, 10.0);
  CHECK(std::abs(sh_c - lf_c) <= 0.01 * lf_c);

  // Small omega: the displacement frame orders later (larger critical g).
  const double lf_s = gs::lf_critical_g(1.0, 0.05);
  const double sh_s = gs::sh_critical_g(1.0, 0.05);
  CHECK(sh_s >= lf_s);
}

TEST_CASE("phase_diagram: a single point reduces to the solvers") {
  gs::SweepSpec spec;
  spec.a = gs::AxisSpec::single(1.0);
  spec.b = gs::AxisSpec::single(0.8);
  spec.g = gs::AxisSpec::single(0.3);
  const auto rows = gs::phase_diagram(spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ok);
  const auto lf = gs::lf_solve({0.8, 1.0, 0.3});
  const auto sh = gs::sh_solve({0.8, 1.0, 0.3});
  CHECK(rows[0].lf.energy_per_site == lf.energy_per_site);
  CHECK(rows[0].sh.energy_per_site == sh.energy_per_site);
}

TEST_CASE("phase_diagram: lambda = 1 contour matches lf_critical_g per column") {
  gs::SweepSpec spec;
  spec.a = gs::AxisSpec::single(1.0);           // omega
  spec.b = {0.4, 1.2, 3};                       // omega0 column values
  spec.g = {0.05, 0.8, 151};
  const auto rows = gs::phase_diagram(spec);
  for (int col = 0; col < spec.b.count; ++col) {
    const double omega0 = spec.b.at(col);
    const double gc = gs::lf_critical_g(omega0, 1.0);
    // Find the grid bracket where lf.lambda crosses 1 from above.
    bool bracketed = false;
    for (int i = 0; i + 1 < spec.g.count; ++i) {
      const auto& r0 = rows[col * spec.g.count + i];
      const auto& r1 = rows[col * spec.g.count + i + 1];
      if (r0.lf.lambda >= 1.0 && r1.lf.lambda < 1.0) {
        CHECK(r0.g <= gc + 1e-12);
        CHECK(r1.g >= gc - 1e-12);
        bracketed = true;
      }
    }
    CHECK(bracketed);
  }
}

TEST_CASE("phase_diagram: theta sweep has the critical coupling shrink as theta -> 0") {
  // Towards theta = 0 the transverse field dies with omega0 = delta sin theta
  // and the ordered phase opens up at ever smaller g (g_c ~ sqrt(omega omega0)/2).
  gs::SweepSpec spec;
  spec.mode = gs::SweepMode::DeltaTheta;
  spec.a = gs::AxisSpec::single(1.0);  // delta
  spec.b = {0.01, 0.2, 3};             // theta, small-angle window
  spec.g = {0.002, 0.4, 200};
  const auto rows = gs::phase_diagram(spec);
  std::vector<double> first_ordered;
  for (int col = 0; col < spec.b.count; ++col) {
    double g_first = std::numeric_limits<double>::infinity();
    for (int i = 0; i < spec.g.count; ++i) {
      const auto& r = rows[col * spec.g.count + i];
      REQUIRE(r.ok);
      if (r.lf.ordered) {
        g_first = r.g;
        break;
      }
    }
    first_ordered.push_back(g_first);
  }
  for (std::size_t i = 1; i < first_ordered.size(); ++i)
    CHECK(first_ordered[i - 1] <= first_ordered[i] + 1e-12);
  // Regression pin against the per-column critical line.
  for (int col = 0; col < spec.b.count; ++col) {
    const double theta = spec.b.at(col);
    const double gc = gs::lf_critical_g(std::sin(theta), std::cos(theta));
    CHECK(first_ordered[col] == doctest::Approx(gc).epsilon(0.05));
  }

  // The delta-theta parameterization reproduces omega = delta cos theta.
  CHECK(rows[0].omega == doctest::Approx(std::cos(0.01)).epsilon(1e-14));
  CHECK(rows[0].omega0 == doctest::Approx(std::sin(0.01)).epsilon(1e-14));
}

TEST_CASE("phase_diagram output is independent of the worker count") {
  gs::SweepSpec spec;
  spec.a = {0.8, 1.2, 3};
  spec.b = {0.3, 1.1, 3};
  spec.g = {0.0, 0.7, 5};
  const auto seq = gs::phase_diagram(spec, 1);
  const auto par = gs::phase_diagram(spec, 8);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].lf.energy_per_site == par[i].lf.energy_per_site);
    CHECK(seq[i].sh.energy_per_site == par[i].sh.energy_per_site);
    CHECK(seq[i].sh.f_star == par[i].sh.f_star);
  }
}

TEST_CASE("phase_diagram records per-point failures and continues") {
  gs::SweepSpec spec;
  spec.a = {-1.0, 1.0, 2};  // omega = -1 is invalid, omega = +1 fine
  spec.b = gs::AxisSpec::single(0.5);
  spec.g = gs::AxisSpec::single(0.2);
  const auto rows = gs::phase_diagram(spec);
  REQUIRE(rows.size() == 2);
  CHECK(!rows[0].ok);
  CHECK(!rows[0].error.empty());
  CHECK(rows[1].ok);
}
