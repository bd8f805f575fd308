#include "isb/cli/commands.hpp"

#include <algorithm>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "isb/ansatz_exc.hpp"
#include "isb/ansatz_gs.hpp"
#include "isb/ed/oracle.hpp"
#include "isb/errors.hpp"
#include "isb/spectroscopy.hpp"
#include "isb/version.hpp"
#include "writers.hpp"

namespace isb::cli {

namespace {

nlohmann::json num_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

nlohmann::json solution_json(const gs::VariationalSolution& s) {
  return {{"kind", s.kind == gs::AnsatzKind::LangFirsov ? "lf" : "sh"},
          {"f_star", s.f_star},
          {"alpha_star", s.alpha_star},
          {"energy_per_site", s.energy_per_site},
          {"lambda", num_json(s.lambda)},
          {"spin_magnetization", s.spin_magnetization},
          {"boson_polarization", s.boson_polarization},
          {"ordered", s.ordered},
          {"converged", s.converged},
          {"message", s.message}};
}

void append_solution_csv(std::ostringstream& csv, const gs::VariationalSolution& s) {
  csv << (s.kind == gs::AnsatzKind::LangFirsov ? "lf" : "sh") << ','
      << fmt17(s.f_star) << ',' << fmt17(s.alpha_star) << ','
      << fmt17(s.energy_per_site) << ',' << fmt17(s.lambda) << ','
      << fmt17(s.spin_magnetization) << ',' << fmt17(s.boson_polarization) << ','
      << bool_str(s.ordered) << '\n';
}

Eigen::ArrayXd axis_values(const gs::AxisSpec& a) {
  Eigen::ArrayXd v(a.count);
  for (int i = 0; i < a.count; ++i) v[i] = a.at(i);
  return v;
}

ed::TruncationSpec::Boundary parse_boundary(const std::string& text) {
  if (text == "periodic") return ed::TruncationSpec::Boundary::Periodic;
  if (text == "open") return ed::TruncationSpec::Boundary::Open;
  throw std::invalid_argument("boundary must be periodic or open");
}

}  // namespace

gs::AxisSpec parse_axis(const std::string& text) {
  gs::AxisSpec a;
  const auto c1 = text.find(':');
  try {
    if (c1 == std::string::npos) {
      a = gs::AxisSpec::single(std::stod(text));
    } else {
      const auto c2 = text.find(':', c1 + 1);
      if (c2 == std::string::npos)
        throw std::invalid_argument("expected lo:hi:count");
      a.lo = std::stod(text.substr(0, c1));
      a.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
      a.count = std::stoi(text.substr(c2 + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad axis spec '" + text + "', expected v or lo:hi:n");
  }
  a.validate();
  return a;
}

void run_ground(const GroundConfig& cfg) {
  const ChainParams chain{cfg.omega0, cfg.omega, cfg.g};
  OutputSet out(cfg.common.outdir, "ground", nlohmann::json(cfg));
  const bool csv = cfg.common.format != "json";
  const bool json = cfg.common.format != "csv";

  if (cfg.ansatz == "lf" || cfg.ansatz == "sh") {
    const gs::VariationalSolution s =
        cfg.ansatz == "lf" ? gs::lf_solve(chain) : gs::sh_solve(chain);
    if (!s.converged) throw SolverError("ground: " + s.message);
    if (json) {
      nlohmann::json j = solution_json(s);
      j["omega0"] = cfg.omega0;
      j["omega"] = cfg.omega;
      j["g"] = cfg.g;
      out.write_json("solution.json", j);
    }
    if (csv) {
      std::ostringstream body;
      body << "kind,f_star,alpha_star,energy_per_site,lambda,spin_magnetization,"
              "boson_polarization,ordered\n";
      append_solution_csv(body, s);
      out.write_text("solution.csv", body.str());
    }
  } else if (cfg.ansatz == "ed") {
    ed::TruncationSpec t;
    t.n_max = cfg.nmax;
    t.sites = cfg.nsites;
    t.boundary = parse_boundary(cfg.boundary);
    ed::GroundStateOptions gopts;
    gopts.seed = cfg.common.seed;
    const ed::EdResult r = ed::ground_state(chain, t, cfg.eigenpairs, gopts);
    if (json) {
      nlohmann::json j = {{"energies", std::vector<double>(r.energies.begin(),
                                                           r.energies.end())},
                          {"energy_per_site", r.energies[0] / cfg.nsites},
                          {"truncation_drift", r.truncation_drift},
                          {"truncation_converged", r.truncation_converged},
                          {"staggered_sx", r.obs.staggered_sx},
                          {"staggered_boson", r.obs.staggered_boson}};
      out.write_json("solution.json", j);
    }
    if (csv) {
      std::ostringstream body;
      body << "kind,nsites,nmax,energy0,energy_per_site,truncation_drift,"
              "truncation_converged,staggered_sx,staggered_boson\n";
      body << "ed," << cfg.nsites << ',' << cfg.nmax << ',' << fmt17(r.energies[0])
           << ',' << fmt17(r.energies[0] / cfg.nsites) << ','
           << fmt17(r.truncation_drift) << ',' << bool_str(r.truncation_converged)
           << ',' << fmt17(r.obs.staggered_sx) << ','
           << fmt17(r.obs.staggered_boson) << '\n';
      out.write_text("solution.csv", body.str());
    }
  } else {
    throw std::invalid_argument("ground: --ansatz must be lf, sh or ed");
  }
  out.finalize();
}

void run_phase_diagram(const PhaseDiagramConfig& cfg) {
  gs::SweepSpec spec;
  if (cfg.mode == "omega")
    spec.mode = gs::SweepMode::OmegaOmega0;
  else if (cfg.mode == "delta")
    spec.mode = gs::SweepMode::DeltaTheta;
  else
    throw std::invalid_argument("phase-diagram: --mode must be omega or delta");
  spec.a = parse_axis(cfg.a);
  spec.b = parse_axis(cfg.b);
  spec.g = parse_axis(cfg.g);

  const auto rows = gs::phase_diagram(spec, cfg.common.workers);

  OutputSet out(cfg.common.outdir, "phase-diagram", nlohmann::json(cfg));
  const bool csv = cfg.common.format != "json";
  const bool json = cfg.common.format != "csv";

  if (csv) {
    std::ostringstream body;
    body << "omega,omega0,delta,theta,g,"
            "lf_f_star,lf_alpha_star,lf_lambda,lf_energy_per_site,"
            "lf_spin_magnetization,lf_boson_polarization,lf_ordered,"
            "sh_f_star,sh_alpha_star,sh_lambda,sh_energy_per_site,"
            "sh_spin_magnetization,sh_boson_polarization,sh_ordered,status\n";
    for (const auto& row : rows) {
      body << fmt17(row.omega) << ',' << fmt17(row.omega0) << ','
           << fmt17(row.delta) << ',' << fmt17(row.theta) << ',' << fmt17(row.g)
           << ',';
      const auto emit = [&](const gs::VariationalSolution& s) {
        body << fmt17(s.f_star) << ',' << fmt17(s.alpha_star) << ','
             << fmt17(s.lambda) << ',' << fmt17(s.energy_per_site) << ','
             << fmt17(s.spin_magnetization) << ',' << fmt17(s.boson_polarization)
             << ',' << bool_str(s.ordered) << ',';
      };
      emit(row.lf);
      emit(row.sh);
      body << (row.ok ? "ok" : row.error) << '\n';
    }
    out.write_text("grid.csv", body.str());
  }
  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json j = {{"omega", row.omega},   {"omega0", row.omega0},
                          {"delta", row.delta},   {"theta", row.theta},
                          {"g", row.g},           {"lf", solution_json(row.lf)},
                          {"sh", solution_json(row.sh)},
                          {"status", row.ok ? "ok" : row.error}};
      arr.push_back(j);
    }
    out.write_json("grid.json", arr);
  }
  out.finalize();
}

void run_bands(const BandsConfig& cfg) {
  ChainParams chain{cfg.omega0, cfg.omega, cfg.g, cfg.nsites};
  exc::BandGrid grid;
  if (cfg.grid == "uniform") {
    grid.kind = exc::BandGrid::Kind::Uniform;
    grid.n_q = cfg.nq;
  } else if (cfg.grid == "finite") {
    grid.kind = exc::BandGrid::Kind::FiniteN;
  } else {
    throw std::invalid_argument("bands: --grid must be uniform or finite");
  }
  const auto points = exc::band_structure(chain, grid);

  OutputSet out(cfg.common.outdir, "bands", nlohmann::json(cfg));
  const bool csv = cfg.common.format != "json";
  const bool json = cfg.common.format != "csv";
  if (csv) {
    std::ostringstream body;
    body << "qd,omega_q,eps_q,abs_g_q,e_minus,e_plus,"
            "beta_f2_minus,beta_b2_minus,beta_f2_plus,beta_b2_plus\n";
    for (const auto& bp : points)
      body << fmt17(bp.qd) << ',' << fmt17(bp.omega_q) << ',' << fmt17(bp.eps_q)
           << ',' << fmt17(std::abs(bp.g_q)) << ',' << fmt17(bp.e_minus) << ','
           << fmt17(bp.e_plus) << ',' << fmt17(std::norm(bp.mix_minus[0])) << ','
           << fmt17(std::norm(bp.mix_minus[1])) << ','
           << fmt17(std::norm(bp.mix_plus[0])) << ','
           << fmt17(std::norm(bp.mix_plus[1])) << '\n';
    out.write_text("bands.csv", body.str());
  }
  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& bp : points)
      arr.push_back({{"qd", bp.qd},
                     {"omega_q", bp.omega_q},
                     {"eps_q", bp.eps_q},
                     {"abs_g_q", std::abs(bp.g_q)},
                     {"e_minus", bp.e_minus},
                     {"e_plus", bp.e_plus},
                     {"beta_f2_minus", std::norm(bp.mix_minus[0])},
                     {"beta_b2_minus", std::norm(bp.mix_minus[1])},
                     {"beta_f2_plus", std::norm(bp.mix_plus[0])},
                     {"beta_b2_plus", std::norm(bp.mix_plus[1])}});
    out.write_json("bands.json", arr);
  }
  out.finalize();
}

namespace {

void write_spectrum_outputs(OutputSet& out, const CommonConfig& common,
                            const spect::SpectrumCurve& curve,
                            const std::string& stem) {
  if (common.format != "json") {
    std::ostringstream body;
    body.precision(17);
    spect::write_spectrum_csv(curve, body);
    out.write_text(stem + ".csv", body.str());
  }
  if (common.format != "csv")
    out.write_json(stem + ".json", spect::spectrum_to_json(curve));
}

}  // namespace

void run_kubo(const KuboConfig& cfg) {
  ChainParams chain{cfg.omega0, cfg.omega, cfg.g, cfg.nsites};
  chain.validate_finite_even();
  spect::ProbeParams probe;
  probe.g_p = cfg.gp;
  probe.alpha_p = cfg.alphap;
  probe.eta = cfg.eta;
  probe.omega_p = cfg.omegap;
  if (!probe.weak_drive())
    std::cerr << "warning: alpha_p > 0.2 leaves the linear-response regime\n";

  const gs::AxisSpec nu = parse_axis(cfg.nu);
  Eigen::ArrayXd q_grid(cfg.nsites);  // full Brillouin zone of the finite ring
  for (int n = 0; n < cfg.nsites; ++n)
    q_grid[n] = 2.0 * std::numbers::pi * n / cfg.nsites;

  const auto curve = spect::kubo_response(chain, probe, axis_values(nu), q_grid);
  OutputSet out(cfg.common.outdir, "kubo", nlohmann::json(cfg));
  write_spectrum_outputs(out, cfg.common, curve, "kubo");
  out.finalize();
}

void run_fano(const FanoConfig& cfg) {
  ChainParams chain{cfg.omega0, cfg.omega, cfg.g, cfg.nsites};
  chain.validate_finite_even();
  spect::ProbeParams probe;
  probe.g_p = cfg.gp;
  probe.v_g = cfg.vg;

  spect::WidthSpec widths;
  ed::EdResult oracle_result;
  if (cfg.widths == "uniform") {
    widths = spect::UniformWidths{cfg.gamma0};
  } else if (cfg.widths == "oracle") {
    ed::TruncationSpec t;
    t.n_max = cfg.nmax;
    t.sites = cfg.nsites;
    ed::GroundStateOptions gopts;
    gopts.seed = cfg.common.seed;
    gopts.compute_drift = false;
    oracle_result = ed::ground_state(chain, t, 20, gopts);
    widths = spect::OracleWidths{&oracle_result, 0.0};
  } else if (cfg.widths == "table") {
    spect::UserWidths user;
    std::stringstream ss(cfg.width_table);
    std::string item;
    while (std::getline(ss, item, ','))
      user.widths.push_back(std::stod(item));
    widths = user;
  } else {
    throw std::invalid_argument("fano: --widths must be uniform, oracle or table");
  }

  const auto res = spect::resonances_from_ansatz(chain, probe, widths);
  const gs::AxisSpec wk = parse_axis(cfg.wk);
  const auto curve = spect::fano_transmission(res, axis_values(wk));

  OutputSet out(cfg.common.outdir, "fano", nlohmann::json(cfg));
  write_spectrum_outputs(out, cfg.common, curve, "fano");

  const auto report = spect::well_resolved_check(res);
  auto rep = nlohmann::json::array();
  for (const auto& e : report.entries)
    rep.push_back({{"energy", e.resonance.energy},
                   {"width", e.resonance.width},
                   {"band", e.resonance.band == spect::BandLabel::Lower ? "lower"
                                                                        : "upper"},
                   {"qd", e.resonance.qd},
                   {"spacing", num_json(e.spacing)},
                   {"ratio", e.ratio},
                   {"flagged", e.flagged}});
  out.write_json("resonances.json",
                 {{"all_resolved", report.all_resolved}, {"entries", rep}});
  out.finalize();
}

void run_ed(const EdConfig& cfg) {
  ChainParams chain{cfg.omega0, cfg.omega, cfg.g, cfg.nsites};
  ed::TruncationSpec t;
  t.n_max = cfg.nmax;
  t.sites = cfg.nsites;
  t.boundary = parse_boundary(cfg.boundary);
  ed::GroundStateOptions gopts;
  gopts.seed = cfg.common.seed;
  const ed::EdResult r = ed::ground_state(chain, t, cfg.eigenpairs, gopts);

  OutputSet out(cfg.common.outdir, "ed", nlohmann::json(cfg));
  if (cfg.common.format != "csv") {
    nlohmann::json j = {
        {"energies", std::vector<double>(r.energies.begin(), r.energies.end())},
        {"residuals", std::vector<double>(r.residuals.begin(), r.residuals.end())},
        {"iterations", r.iterations},
        {"truncation_drift", r.truncation_drift},
        {"truncation_converged", r.truncation_converged},
        {"staggered_sx", r.obs.staggered_sx},
        {"staggered_boson", r.obs.staggered_boson}};
    out.write_json("ed.json", j);
  }
  if (cfg.common.format != "json") {
    std::ostringstream body;
    ed::write_observables_csv(r, body);
    out.write_text("ed.csv", body.str());
  }
  if (!cfg.dump_vectors.empty())
    ed::dump_eigenvectors(r, (out.dir() / cfg.dump_vectors).string());
  out.finalize();
}

void run_convergence(const ConvergenceConfig& cfg) {
  ChainParams chain{cfg.omega0, cfg.omega, cfg.g, cfg.nsites};
  ed::TruncationSpec t;
  t.n_max = cfg.nmax;
  t.sites = cfg.nsites;
  t.boundary = parse_boundary(cfg.boundary);

  ed::SweepQuantity q;
  if (cfg.quantity == "energy")
    q = ed::SweepQuantity::GroundEnergy;
  else if (cfg.quantity == "occupation")
    q = ed::SweepQuantity::MeanOccupation;
  else if (cfg.quantity == "order")
    q = ed::SweepQuantity::StaggeredMagnetization;
  else
    throw std::invalid_argument(
        "convergence: --quantity must be energy, occupation or order");

  ed::GroundStateOptions gopts;
  gopts.seed = cfg.common.seed;
  const auto table = ed::convergence_sweep(chain, t, q, cfg.tol, gopts);

  OutputSet out(cfg.common.outdir, "convergence", nlohmann::json(cfg));
  if (cfg.common.format != "json") {
    std::ostringstream body;
    body << "n_max,value,change\n";
    for (const auto& row : table.rows)
      body << row.n_max << ',' << fmt17(row.value) << ',' << fmt17(row.change)
           << '\n';
    out.write_text("convergence.csv", body.str());
  }
  if (cfg.common.format != "csv") {
    auto arr = nlohmann::json::array();
    for (const auto& row : table.rows)
      arr.push_back(
          {{"n_max", row.n_max}, {"value", row.value}, {"change", row.change}});
    out.write_json("convergence.json",
                   {{"rows", arr}, {"converged", table.converged}});
  }
  out.finalize();
}

namespace {

void add_common(CLI::App* sub, CommonConfig& c) {
  sub->add_option("--outdir", c.outdir, "output directory")
      ->envname("ISB_OUTDIR")
      ->capture_default_str();
  sub->add_option("--format", c.format, "csv | json | both")
      ->check(CLI::IsMember({"csv", "json", "both"}))
      ->capture_default_str();
  sub->add_option("--workers", c.workers, "worker pool size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "RNG seed (Lanczos start vector)")
      ->capture_default_str();
}

void add_chain(CLI::App* sub, double& omega0, double& omega, double& g) {
  sub->add_option("--omega0", omega0, "spin frequency")->capture_default_str();
  sub->add_option("--omega", omega, "boson frequency")->capture_default_str();
  sub->add_option("--g", g, "spin-boson coupling")->capture_default_str();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"interspersed spin-boson chain toolkit"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "TOML config file (flags win over file entries)");
  app.allow_config_extras(false);
  app.require_subcommand(1);

  GroundConfig ground;
  PhaseDiagramConfig pd;
  BandsConfig bands;
  KuboConfig kubo;
  FanoConfig fano;
  EdConfig edc;
  ConvergenceConfig conv;

  auto* s_ground = app.add_subcommand("ground", "variational or ED ground state");
  add_common(s_ground, ground.common);
  add_chain(s_ground, ground.omega0, ground.omega, ground.g);
  s_ground->add_option("--ansatz", ground.ansatz, "lf | sh | ed")
      ->check(CLI::IsMember({"lf", "sh", "ed"}))
      ->capture_default_str();
  s_ground->add_option("--nsites", ground.nsites, "chain length (ed)")
      ->capture_default_str();
  s_ground->add_option("--nmax", ground.nmax, "boson truncation (ed)")
      ->capture_default_str();
  s_ground->add_option("--boundary", ground.boundary, "periodic | open (ed)")
      ->capture_default_str();
  s_ground->add_option("--eigenpairs", ground.eigenpairs, "eigenpairs (ed)")
      ->capture_default_str();

  auto* s_pd = app.add_subcommand("phase-diagram", "sweep both ansaetze on a grid");
  add_common(s_pd, pd.common);
  s_pd->add_option("--mode", pd.mode, "omega | delta")->capture_default_str();
  s_pd->add_option("--a", pd.a, "omega (or delta) axis, v or lo:hi:n")
      ->capture_default_str();
  s_pd->add_option("--b", pd.b, "omega0 (or theta) axis, v or lo:hi:n")
      ->capture_default_str();
  s_pd->add_option("--g-axis", pd.g, "coupling axis, v or lo:hi:n")
      ->capture_default_str();

  auto* s_bands = app.add_subcommand("bands", "two-band quasiparticle structure");
  add_common(s_bands, bands.common);
  add_chain(s_bands, bands.omega0, bands.omega, bands.g);
  s_bands->add_option("--grid", bands.grid, "uniform | finite")->capture_default_str();
  s_bands->add_option("--nq", bands.nq, "uniform grid size")->capture_default_str();
  s_bands->add_option("--nsites", bands.nsites, "chain length (finite grid)")
      ->capture_default_str();

  auto* s_kubo = app.add_subcommand("kubo", "linear-response spectrum");
  add_common(s_kubo, kubo.common);
  add_chain(s_kubo, kubo.omega0, kubo.omega, kubo.g);
  s_kubo->add_option("--nsites", kubo.nsites, "chain length")->capture_default_str();
  s_kubo->add_option("--gp", kubo.gp, "probe coupling")->capture_default_str();
  s_kubo->add_option("--alphap", kubo.alphap, "probe drive amplitude")
      ->capture_default_str();
  s_kubo->add_option("--eta", kubo.eta, "Lorentzian broadening")
      ->capture_default_str();
  s_kubo->add_option("--omegap", kubo.omegap, "probe frequency")
      ->capture_default_str();
  s_kubo->add_option("--nu", kubo.nu, "frequency axis, lo:hi:n")
      ->capture_default_str();

  auto* s_fano = app.add_subcommand("fano", "waveguide transmission");
  add_common(s_fano, fano.common);
  add_chain(s_fano, fano.omega0, fano.omega, fano.g);
  s_fano->add_option("--nsites", fano.nsites, "chain length")->capture_default_str();
  s_fano->add_option("--widths", fano.widths, "uniform | oracle | table")
      ->capture_default_str();
  s_fano->add_option("--gamma0", fano.gamma0, "uniform width")->capture_default_str();
  s_fano->add_option("--vg", fano.vg, "group velocity")->capture_default_str();
  s_fano->add_option("--gp", fano.gp, "probe coupling (oracle widths)")
      ->capture_default_str();
  s_fano->add_option("--nmax", fano.nmax, "oracle truncation")->capture_default_str();
  s_fano->add_option("--width-table", fano.width_table,
                     "comma separated widths (table mode)")
      ->capture_default_str();
  s_fano->add_option("--wk", fano.wk, "incoming energy axis, lo:hi:n")
      ->capture_default_str();

  auto* s_ed = app.add_subcommand("ed", "exact diagonalization");
  add_common(s_ed, edc.common);
  add_chain(s_ed, edc.omega0, edc.omega, edc.g);
  s_ed->add_option("--nsites", edc.nsites, "chain length")->capture_default_str();
  s_ed->add_option("--nmax", edc.nmax, "boson truncation")->capture_default_str();
  s_ed->add_option("--boundary", edc.boundary, "periodic | open")
      ->capture_default_str();
  s_ed->add_option("--eigenpairs", edc.eigenpairs, "eigenpairs to compute")
      ->capture_default_str();
  s_ed->add_option("--dump-vectors", edc.dump_vectors,
                   "binary eigenvector dump filename")
      ->capture_default_str();

  auto* s_conv = app.add_subcommand("convergence", "truncation convergence sweep");
  add_common(s_conv, conv.common);
  add_chain(s_conv, conv.omega0, conv.omega, conv.g);
  s_conv->add_option("--nsites", conv.nsites, "chain length")->capture_default_str();
  s_conv->add_option("--nmax", conv.nmax, "largest truncation")->capture_default_str();
  s_conv->add_option("--quantity", conv.quantity, "energy | occupation | order")
      ->capture_default_str();
  s_conv->add_option("--tol", conv.tol, "convergence tolerance")
      ->capture_default_str();
  s_conv->add_option("--boundary", conv.boundary, "periodic | open")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (app.got_subcommand(s_ground)) run_ground(ground);
    else if (app.got_subcommand(s_pd)) run_phase_diagram(pd);
    else if (app.got_subcommand(s_bands)) run_bands(bands);
    else if (app.got_subcommand(s_kubo)) run_kubo(kubo);
    else if (app.got_subcommand(s_fano)) run_fano(fano);
    else if (app.got_subcommand(s_ed)) run_ed(edc);
    else if (app.got_subcommand(s_conv)) run_convergence(conv);
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitSolverError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}

}  // namespace isb::cli
