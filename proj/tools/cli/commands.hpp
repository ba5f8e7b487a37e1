// Subcommands of the `circlight` tool:
//   schmidt           Schmidt decomposition of a two-mode RICS (JSON)
//   sweep-amplitude   E versus |α₀| for a list of N at fixed q (CSV)
//   sweep-n           E versus N at fixed |α₀| and q, optional B/S split (CSV)
//   kerr              Kerr-state E versus N, optional RICS max-over-q (CSV)
//   oracle            all three methods on one state, exit 1 on disagreement
//   decompose         RICS-basis coordinates of a single-mode state (JSON)
#pragma once

#include "circlight/entanglement.hpp"
#include "cli/csv.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace circlight::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDisagreement = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitInternal = 4,
};

/// Tolerance on the largest pairwise difference reported by `oracle`.
inline constexpr double kOracleTolerance = 1e-6;

struct AmplitudeSweep {
  std::vector<int> n_list;
  int q = 1;
  double alpha0_min = 0.1;
  double alpha0_max = 4.0;
  int steps = 40;
  std::vector<Method> methods{Method::AnalyticRics};
};

struct ComponentSweep {
  double alpha0 = 1.0;
  int q = 0;
  int n_max = 1;
  bool decompose = false;
  std::vector<Method> methods{Method::AnalyticRics};
};

struct KerrSweep {
  double alpha0 = 1.0;
  int n_max = 1;
  bool with_rics_qmax = false;
  std::vector<Method> methods{Method::RicsBasisEig};
};

/// Inclusive linear grid; a single step yields {lo}.
std::vector<double> linear_grid(double lo, double hi, int steps);

/// E of the two-mode RICS `label` by the requested method.
double rics_entropy(const RicsLabel& label, Method method);

SweepTable sweep_amplitude(const AmplitudeSweep& spec);
SweepTable sweep_components(const ComponentSweep& spec);
SweepTable sweep_kerr(const KerrSweep& spec);

struct OracleReport {
  std::optional<double> analytic;  // only for states that are a single RICS
  double rics_basis = 0.0;
  double fock = 0.0;
  int cutoff = 0;
  double max_delta = 0.0;
};

OracleReport run_oracle(const CircularState& s, bool kerr_closed_form, int cutoff);

/// Full command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circlight::cli
