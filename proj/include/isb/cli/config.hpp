#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "isb/ansatz_gs.hpp"

namespace isb::gs {

inline void to_json(nlohmann::json& j, const AxisSpec& a) {
  j = {{"lo", a.lo}, {"hi", a.hi}, {"count", a.count}};
}
inline void from_json(const nlohmann::json& j, AxisSpec& a) {
  j.at("lo").get_to(a.lo);
  j.at("hi").get_to(a.hi);
  j.at("count").get_to(a.count);
}

}  // namespace isb::gs

namespace isb::cli {

/// "lo:hi:n" or a single value.
gs::AxisSpec parse_axis(const std::string& text);

struct CommonConfig {
  std::string outdir = ".";
  std::string format = "both";  ///< csv | json | both
  int workers = 1;
  std::uint64_t seed = 20240101;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CommonConfig, outdir, format, workers, seed)

struct GroundConfig {
  CommonConfig common;
  std::string ansatz = "lf";  ///< lf | sh | ed
  double omega0 = 1.0, omega = 1.0, g = 0.0;
  int nsites = 4;   // ed only
  int nmax = 6;     // ed only
  std::string boundary = "periodic";
  int eigenpairs = 4;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(GroundConfig, common, ansatz, omega0, omega, g,
                                   nsites, nmax, boundary, eigenpairs)

struct PhaseDiagramConfig {
  CommonConfig common;
  std::string mode = "omega";  ///< omega: (omega, omega0, g); delta: (delta, theta, g)
  std::string a = "1";         ///< omega or delta axis
  std::string b = "1";         ///< omega0 or theta axis
  std::string g = "0:1:11";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PhaseDiagramConfig, common, mode, a, b, g)

struct BandsConfig {
  CommonConfig common;
  double omega0 = 1.0, omega = 1.0, g = 0.0;
  std::string grid = "uniform";  ///< uniform | finite
  int nq = 128;
  int nsites = 10;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BandsConfig, common, omega0, omega, g, grid, nq,
                                   nsites)

struct KuboConfig {
  CommonConfig common;
  double omega0 = 1.0, omega = 1.0, g = 0.0;
  int nsites = 10;
  double gp = 0.01, alphap = 0.05, eta = 0.01, omegap = 0.0;
  std::string nu = "0:3:601";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(KuboConfig, common, omega0, omega, g, nsites, gp,
                                   alphap, eta, omegap, nu)

struct FanoConfig {
  CommonConfig common;
  double omega0 = 1.0, omega = 1.0, g = 0.0;
  int nsites = 10;
  std::string widths = "uniform";  ///< uniform | oracle | table
  double gamma0 = 1e-4;
  double vg = 1.0;
  double gp = 0.01;
  int nmax = 4;                 // oracle mode truncation
  std::string width_table;      // comma-separated, table mode
  std::string wk = "0:3:2001";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FanoConfig, common, omega0, omega, g, nsites,
                                   widths, gamma0, vg, gp, nmax, width_table, wk)

struct EdConfig {
  CommonConfig common;
  double omega0 = 1.0, omega = 1.0, g = 0.0;
  int nsites = 4;
  int nmax = 6;
  std::string boundary = "periodic";
  int eigenpairs = 4;
  std::string dump_vectors;  ///< optional binary eigenvector dump path
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EdConfig, common, omega0, omega, g, nsites, nmax,
                                   boundary, eigenpairs, dump_vectors)

struct ConvergenceConfig {
  CommonConfig common;
  double omega0 = 1.0, omega = 1.0, g = 0.0;
  int nsites = 4;
  int nmax = 8;
  std::string quantity = "energy";  ///< energy | occupation | order
  double tol = 1e-8;
  std::string boundary = "periodic";
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConvergenceConfig, common, omega0, omega, g,
                                   nsites, nmax, quantity, tol, boundary)

}  // namespace isb::cli
