#include "isb/spectroscopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>

#include "isb/ansatz_exc.hpp"
#include "isb/ansatz_gs.hpp"
#include "isb/version.hpp"

namespace isb::spect {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

nlohmann::json chain_json(const ChainParams& p) {
  return {{"omega0", p.omega0}, {"omega", p.omega}, {"g", p.g}, {"sites", p.sites}};
}

nlohmann::json probe_json(const ProbeParams& pr) {
  return {{"g_p", pr.g_p},
          {"omega_p", pr.omega_p},
          {"alpha_p", pr.alpha_p},
          {"v_g", pr.v_g},
          {"eta", pr.eta}};
}

/// Band energies and boson weights at qd folded into [0, pi].
exc::BandPoint folded_band_point(const ChainParams& p, double qd) {
  double q = std::fmod(qd, 2.0 * kPi);
  if (q < 0.0) q += 2.0 * kPi;
  if (q > kPi) q = 2.0 * kPi - q;
  return exc::band_point(p, q);
}

}  // namespace

void ResonanceSet::validate() const {
  std::set<std::pair<int, long long>> labels;
  for (const auto& r : items) {
    if (!std::isfinite(r.energy) || !std::isfinite(r.width) || r.width < 0.0)
      throw std::invalid_argument("ResonanceSet: widths must be finite and >= 0");
    const auto key = std::make_pair(int(r.band), llround(r.qd * 1e12));
    if (!labels.insert(key).second)
      throw std::invalid_argument("ResonanceSet: duplicate (band, qd) label");
  }
}

void SpectrumCurve::validate() const {
  for (int i = 1; i < axis.size(); ++i)
    if (!(axis[i] > axis[i - 1]))
      throw std::invalid_argument("SpectrumCurve: axis must strictly increase");
  if (!values.isFinite().all())
    throw std::invalid_argument("SpectrumCurve: values must be finite");
}

SpectrumCurve kubo_response(const ChainParams& p, const ProbeParams& probe,
                            const Eigen::ArrayXd& nu_grid,
                            const Eigen::ArrayXd& q_grid) {
  p.validate();
  probe.validate();
  if (nu_grid.size() < 1 || q_grid.size() < 1)
    throw std::invalid_argument("kubo_response: empty grid");

  const gs::VariationalSolution lf = gs::lf_solve(p);

  SpectrumCurve curve;
  curve.axis_name = "nu";
  curve.axis = nu_grid;
  curve.row_name = "qd";
  curve.rows = q_grid;
  curve.values.setZero(q_grid.size(), nu_grid.size());

  for (int iq = 0; iq < q_grid.size(); ++iq) {
    const exc::BandPoint bp = folded_band_point(p, q_grid[iq]);
    const double w_minus = std::norm(bp.mix_minus[1]);  // boson weight
    const double w_plus = std::norm(bp.mix_plus[1]);
    const bool staggered = std::abs(q_grid[iq] - kPi) < 1e-12;
    for (int iv = 0; iv < nu_grid.size(); ++iv) {
      const double nu = nu_grid[iv];
      Complex a = probe.alpha_p * probe.g_p *
                  (w_minus / Complex(nu - bp.e_minus, probe.eta) +
                   w_plus / Complex(nu - bp.e_plus, probe.eta));
      if (staggered)
        a += lf.boson_polarization * Complex(0.0, probe.eta) / Complex(nu, probe.eta);
      curve.values(iq, iv) = std::abs(a);
    }
  }

  curve.metadata = {{"kind", "kubo_response"},
                    {"chain", chain_json(p)},
                    {"probe", probe_json(probe)},
                    {"code_version", kVersion},
                    {"weak_drive", probe.weak_drive()}};
  curve.validate();
  return curve;
}

SpectrumCurve fano_transmission(const ResonanceSet& res,
                                const Eigen::ArrayXd& omega_k_grid) {
  res.validate();
  SpectrumCurve curve;
  curve.axis_name = "omega_k";
  curve.axis = omega_k_grid;
  curve.values.setZero(1, omega_k_grid.size());

  for (int i = 0; i < omega_k_grid.size(); ++i) {
    const double w = omega_k_grid[i];
    double s = 0.0;
    bool at_pole = false;
    for (const auto& r : res.items) {
      if (r.width == 0.0) continue;  // decoupled resonance, no scattering path
      if (w == r.energy) {
        at_pole = true;  // T -> 0 in the limit
        break;
      }
      s += r.width / (w - r.energy);
    }
    curve.values(0, i) = at_pole ? 0.0 : 1.0 / (1.0 + s * s);
  }

  nlohmann::json reslist = nlohmann::json::array();
  for (const auto& r : res.items)
    reslist.push_back({{"energy", r.energy},
                       {"width", r.width},
                       {"band", r.band == BandLabel::Lower ? "lower" : "upper"},
                       {"qd", r.qd}});
  curve.metadata = {{"kind", "fano_transmission"},
                    {"resonances", reslist},
                    {"code_version", kVersion}};
  curve.validate();
  return curve;
}

ResonanceSet resonances_from_ansatz(const ChainParams& p, const ProbeParams& probe,
                                    const WidthSpec& widths) {
  p.validate_finite_even();
  probe.validate();

  const auto points = exc::band_structure(
      p, exc::BandGrid{exc::BandGrid::Kind::FiniteN, 0});

  ResonanceSet set;
  for (const auto& bp : points) {
    set.items.push_back({bp.e_minus, 0.0, BandLabel::Lower, bp.qd});
    set.items.push_back({bp.e_plus, 0.0, BandLabel::Upper, bp.qd});
  }

  const auto decoupled = [](const Resonance& r) {
    // The waveguide coupling carries the same (1 - e^{-i qd}) factor as the
    // branch mixing, so the upper band at the zone center never scatters.
    return r.band == BandLabel::Upper && r.qd == 0.0;
  };

  if (const auto* uniform = std::get_if<UniformWidths>(&widths)) {
    if (!(uniform->gamma0 >= 0.0))
      throw std::invalid_argument("resonances_from_ansatz: gamma0 must be >= 0");
    for (auto& r : set.items) r.width = decoupled(r) ? 0.0 : uniform->gamma0;
  } else if (const auto* user = std::get_if<UserWidths>(&widths)) {
    if (user->widths.size() != set.items.size())
      throw std::invalid_argument(
          "resonances_from_ansatz: user table must cover every resonance");
    for (std::size_t i = 0; i < set.items.size(); ++i)
      set.items[i].width = decoupled(set.items[i]) ? 0.0 : user->widths[i];
  } else {
    const auto& oracle = std::get<OracleWidths>(widths);
    if (oracle.result == nullptr)
      throw std::invalid_argument("resonances_from_ansatz: missing oracle result");
    if (oracle.result->spec.sites != p.sites)
      throw std::invalid_argument(
          "resonances_from_ansatz: oracle chain length does not match");
    const Eigen::VectorXd& energies = oracle.result->energies;
    const int k = int(energies.size());

    double window = oracle.match_window;
    if (window <= 0.0) {
      // Default: a quarter of the smallest resonance spacing.
      window = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < set.items.size(); ++i)
        for (std::size_t j = i + 1; j < set.items.size(); ++j)
          window = std::min(window,
                            std::abs(set.items[i].energy - set.items[j].energy));
      window = std::max(0.25 * window, 1e-6);
    }

    for (auto& r : set.items) {
      if (decoupled(r)) continue;
      int best = -1;
      double best_gap = window;
      for (int n = 1; n < k; ++n) {
        const double gap = std::abs(energies[n] - energies[0] - r.energy);
        if (gap < best_gap) {
          best_gap = gap;
          best = n;
        }
      }
      if (best < 0) continue;  // no matching level inside the window
      const Complex m =
          ed::matrix_element(*oracle.result, ed::SigmaX{0}, best, 0);
      r.width = probe.g_p * probe.g_p * std::norm(m) / std::abs(probe.v_g);
    }
  }
  set.validate();
  return set;
}

WellResolvedReport well_resolved_check(const ResonanceSet& res) {
  res.validate();
  if (res.items.empty())
    throw std::invalid_argument("well_resolved_check: need at least one resonance");
  WellResolvedReport report;
  for (std::size_t i = 0; i < res.items.size(); ++i) {
    WellResolvedEntry entry;
    entry.resonance = res.items[i];
    entry.spacing = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < res.items.size(); ++j)
      if (j != i)
        entry.spacing = std::min(entry.spacing,
                                 std::abs(res.items[i].energy - res.items[j].energy));
    entry.ratio = std::isinf(entry.spacing) ? 0.0
                                            : entry.resonance.width / entry.spacing;
    entry.flagged = entry.ratio > 0.1;
    report.all_resolved = report.all_resolved && !entry.flagged;
    report.entries.push_back(entry);
  }
  return report;
}

void write_spectrum_csv(const SpectrumCurve& curve, std::ostream& out) {
  const bool two_d = curve.rows.size() > 0;
  if (two_d)
    out << curve.row_name << ',' << curve.axis_name << ",value\n";
  else
    out << curve.axis_name << ",value\n";
  for (int r = 0; r < std::max<Eigen::Index>(1, curve.rows.size()); ++r)
    for (int c = 0; c < curve.axis.size(); ++c) {
      if (two_d) out << curve.rows[r] << ',';
      out << curve.axis[c] << ',' << curve.values(r, c) << '\n';
    }
}

nlohmann::json spectrum_to_json(const SpectrumCurve& curve) {
  nlohmann::json j;
  j["metadata"] = curve.metadata;
  j["axis_name"] = curve.axis_name;
  j["axis"] = std::vector<double>(curve.axis.begin(), curve.axis.end());
  if (curve.rows.size() > 0) {
    j["row_name"] = curve.row_name;
    j["rows"] = std::vector<double>(curve.rows.begin(), curve.rows.end());
  }
  auto values = nlohmann::json::array();
  for (int r = 0; r < curve.values.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < curve.values.cols(); ++c) row.push_back(curve.values(r, c));
    values.push_back(row);
  }
  j["values"] = values;
  return j;
}

}  // namespace isb::spect
