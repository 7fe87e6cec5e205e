#pragma once

// Run configuration, orchestration, output files and error tables.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esdg/dg_solver.hpp"
#include "esdg/grid_field.hpp"
#include "esdg/limiters.hpp"
#include "esdg/problems.hpp"
#include "esdg/time_integration.hpp"

namespace esdg {

struct RunConfig {
  std::string problem;
  int k = 2;
  std::size_t nx = 100;
  std::size_t ny = 0;  // 0: same as nx for 2D problems
  double cfl = 0.1;
  double tvb_m = 10.0;
  bool tvb = true;
  bool bounds = true;
  InterfaceFlux flux = InterfaceFlux::lax_friedrichs;
  SignalSpeedModel signal_speed = SignalSpeedModel::physical;
  std::string out = "out";
  std::vector<double> snapshots;
  std::optional<double> t_end;     // overrides the problem's final time
  std::optional<double> fixed_dt;  // overrides the CFL step

  bool operator==(const RunConfig&) const = default;
};

/// key = value lines; '#' starts a comment. Throws ConfigError naming the line
/// for unknown keys or malformed values, and for invalid combinations.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Text that parse_config maps back to the same configuration.
std::string format_config(const RunConfig& config);

struct RunResult {
  ProblemSpec problem;
  RunConfig config;
  std::optional<Field1D> field1;
  std::optional<Field2D> field2;
  std::vector<std::pair<double, double>> entropy;  // (t, total entropy)
  std::vector<std::pair<double, Field1D>> snapshots1;
  std::vector<std::pair<double, Field2D>> snapshots2;
  IntegrateResult integration;
  double wall_seconds = 0.0;
};

/// Runs the configured problem without writing files.
RunResult simulate(const RunConfig& config);

/// simulate, then write solution.dat, entropy.dat and manifest.txt into
/// config.out, plus solution_t<time>.dat for each snapshot.
RunResult run(const RunConfig& config);

/// Writes the three output files of a finished run into `dir`.
void write_outputs(const RunResult& result, const std::filesystem::path& dir);

/// Columnar node dump: "x rho ux uy p entropy" (2D: "x y rho ux uy p entropy",
/// row-major over global nodes, x fastest).
std::string format_solution(const Field1D& field, const GasParams& gas);
std::string format_solution(const Field2D& field, const GasParams& gas);

struct ErrorRow {
  std::size_t cells = 0;
  double l1 = 0.0;
  double linf = 0.0;
  double order_l1 = 0.0;    // NaN on the first row
  double order_linf = 0.0;  // NaN on the first row
};

struct ErrorReport {
  std::string problem;
  int k = 0;
  std::vector<ErrorRow> rows;
};

/// Quadrature L1 and max-norm density deviations from `reference(x)` at the nodes.
std::pair<double, double> density_errors(const Field1D& field, const GasParams& gas,
                                         const std::function<double(double)>& reference);

/// Density of the DG polynomial of `field` at x.
double evaluate_density(const Field1D& field, const GasParams& gas, double x);

/// Errors against the problem's exact solution at t_end for each cell count.
/// Throws InvalidArgument when the problem has no exact solution.
ErrorReport convergence(const RunConfig& config, const std::vector<std::size_t>& resolutions);

/// Errors against a run with `reference_cells` cells, evaluated at the nodes
/// of each coarse run.
ErrorReport self_convergence(const RunConfig& config, const std::vector<std::size_t>& resolutions,
                             std::size_t reference_cells);

/// Fills order columns as log2 ratios of successive rows.
void fill_orders(ErrorReport& report);

std::string format_report(const ErrorReport& report);

}  // namespace esdg
