#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "radpoly/report.hpp"

namespace radpoly::cli {

/// Rejected configuration (exit code 2 at the command line).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything a subcommand needs; filled from the command line with the
/// documented defaults.
struct ExperimentConfig {
  std::string command;
  int dim = 2;
  bool dim_set = false;  // whether --dim was given explicitly
  std::string points = "halton";
  int N = 441;
  int n = -1;  // -1: derive from N (interp/pde) or use the command default
  std::vector<std::string> families;
  double eps_min = 1e-2;
  double eps_max = 1e2;
  int eps_count = 30;
  int quad_order = 60;
  unsigned long long seed = 12345;
  std::string out;
  bool check = false;
};

ExperimentReport run_table2(const ExperimentConfig& cfg);
ExperimentReport run_interp(const ExperimentConfig& cfg);
ExperimentReport run_pde(const ExperimentConfig& cfg);
ExperimentReport run_cond(const ExperimentConfig& cfg);
ExperimentReport run_gram(const ExperimentConfig& cfg);
ExperimentReport run_points(const ExperimentConfig& cfg);

/// Threshold review of a finished report for --check mode; returns one
/// message per violated threshold, empty when everything holds.
std::vector<std::string> check_report(const ExperimentConfig& cfg, const ExperimentReport& rep);

/// Full command-line entry point (argv without the program name). Writes the
/// CSV to --out or to `out`, diagnostics to `err`. Returns the process exit
/// code: 0 success, 2 configuration error, 3 numerical failure, 4 check-mode
/// threshold violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radpoly::cli
