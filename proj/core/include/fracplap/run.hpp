#pragma once

#include <fracplap/quad.hpp>
#include <fracplap/table.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fracplap {

/// One batch run: command, operator parameters, and output settings.
/// Round-trips through JSON; invalid parameter combinations are rejected
/// before any computation starts.
struct RunConfig {
  std::string command = "compare";
  int n = 1;
  double s = 0.5;
  double p = 2.0;
  std::string function = "gaussian";
  std::vector<double> points{0.0, 0.5, 1.0}; // n coordinates per point
  double tol = 1e-6;
  int hermite_nodes = 64;
  std::string output;          // empty: stdout
  std::string format = "csv";  // csv | json
  std::uint64_t seed = 0;      // reserved for randomized property sampling

  std::vector<int> n_list{1, 2, 3};
  std::vector<double> s_list;  // default depends on the command
  std::vector<double> p_list;
  std::vector<double> h_list{0.4, 0.2, 0.1};
  double delta_kappa = 1.0;    // delta = h^kappa; negative selects delta = 0
  int stencil = 128;
  std::string mode = "s_to_1"; // limits: s_to_1 | p_to_2
  std::vector<double> L_list{4.0, 8.0, 16.0};
  double bump_radius = 1.5;

  QuadConfig quad() const;
  void validate() const;

  std::string to_json_string() const;
  static RunConfig from_json_string(const std::string& text);
};

Table cmd_constants(const RunConfig& cfg);
Table cmd_compare(const RunConfig& cfg);
Table cmd_limits(const RunConfig& cfg);
Table cmd_discrete(const RunConfig& cfg);
Table cmd_spectral(const RunConfig& cfg);
Table cmd_seminorm(const RunConfig& cfg);
Table cmd_weights_export(const RunConfig& cfg);

/// Dispatch on cfg.command.
Table run_command(const RunConfig& cfg);

} // namespace fracplap
