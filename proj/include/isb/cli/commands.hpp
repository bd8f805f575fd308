#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isb/cli/config.hpp"

namespace isb::cli {

// Exit codes of the command-line contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverError = 3;

// Command runners. They validate, compute, and write the output files plus
// a manifest; configuration problems throw std::invalid_argument /
// std::domain_error, solver failures throw isb::SolverError.
void run_ground(const GroundConfig& cfg);
void run_phase_diagram(const PhaseDiagramConfig& cfg);
void run_bands(const BandsConfig& cfg);
void run_kubo(const KuboConfig& cfg);
void run_fano(const FanoConfig& cfg);
void run_ed(const EdConfig& cfg);
void run_convergence(const ConvergenceConfig& cfg);

/// Full front end: parse arguments (without the program name), dispatch,
/// map exceptions to exit codes. Warnings and errors go to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace isb::cli
