#include "esdg/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "esdg/errors.hpp"

namespace esdg {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class LineError {
 public:
  explicit LineError(std::size_t line) : line_(line) {}
  [[noreturn]] void operator()(const std::string& what) const {
    throw ConfigError("line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::size_t line_;
};

double parse_double(const std::string& s, const LineError& fail) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    fail("expected a number, got '" + s + "'");
  }
  return v;
}

std::size_t parse_count(const std::string& s, const LineError& fail) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail("expected a positive integer, got '" + s + "'");
  }
  return v;
}

bool parse_bool(const std::string& s, const LineError& fail) {
  if (s == "true" || s == "on" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "off" || s == "0" || s == "no") return false;
  fail("expected true or false, got '" + s + "'");
}

std::string valid_ids() {
  std::string out;
  for (const auto& id : problem_ids()) out += (out.empty() ? "" : ", ") + id;
  return out;
}

void validate(const RunConfig& c) {
  if (c.problem.empty()) throw ConfigError("missing problem; valid ids: " + valid_ids());
  if (std::find(problem_ids().begin(), problem_ids().end(), c.problem) == problem_ids().end()) {
    throw ConfigError("unknown problem '" + c.problem + "'; valid ids: " + valid_ids());
  }
  if (c.k < 1 || c.k > kMaxDegree) {
    throw ConfigError("k must lie in 1.." + std::to_string(kMaxDegree));
  }
  if (c.nx < 1) throw ConfigError("cells must be positive");
  if (!(c.cfl > 0.0)) throw ConfigError("cfl must be positive");
  if (!(c.tvb_m >= 0.0)) throw ConfigError("tvb_m must be nonnegative");
  if (c.t_end && !(*c.t_end >= 0.0)) throw ConfigError("t_end must be nonnegative");
  if (c.fixed_dt && !(*c.fixed_dt > 0.0)) throw ConfigError("fixed_dt must be positive");
  if (c.out.empty()) throw ConfigError("out must not be empty");
}

LimiterConfig limiter_config(const RunConfig& c) { return {c.tvb_m, 1e-13}; }

SolverConfig solver_config(const RunConfig& c, const ProblemSpec& p) {
  SolverConfig s;
  s.k = c.k;
  s.cfl = c.cfl;
  s.interface_flux = c.flux;
  s.signal_speed = c.signal_speed;
  s.gas = p.gas;
  return s;
}

template <class Grid>
IntegrateResult advance(DgField<Grid>& field, const RunConfig& config, const ProblemSpec& problem,
                        RunResult& result) {
  const SbpMatrices sbp = make_sbp(config.k);
  const SolverConfig solver = solver_config(config, problem);
  const LimiterConfig limits = limiter_config(config);
  const BoundaryKind bc = problem.bc;

  const auto rhs = [&](const DgField<Grid>& u) {
    if constexpr (Grid::dimension == 1) {
      return residual_1d(u, sbp, solver, bc);
    } else {
      return residual_2d(u, sbp, solver, bc);
    }
  };
  const auto hook = [&](DgField<Grid>& u) {
    if (config.bounds) apply_bounds(u, limits);
    if (config.tvb) {
      apply_tvb(u, limits, bc);
      if (config.bounds) apply_bounds(u, limits);
    }
  };
  const auto dt = [&](const DgField<Grid>& u) { return compute_dt(u, solver); };

  IntegrateOptions options;
  options.t_end = config.t_end.value_or(problem.t_end);
  options.scheme = scheme_for_degree(config.k);
  options.fixed_dt = config.fixed_dt.value_or(0.0);
  options.snapshot_times = config.snapshots;

  IntegrateCallbacks<Grid> callbacks;
  callbacks.on_entropy = [&](double t, double s) { result.entropy.emplace_back(t, s); };
  callbacks.on_snapshot = [&](double t, const DgField<Grid>& u) {
    if constexpr (Grid::dimension == 1) {
      result.snapshots1.emplace_back(t, u);
    } else {
      result.snapshots2.emplace_back(t, u);
    }
  };
  return integrate(field, rhs, hook, dt, problem.gas, options, callbacks);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

std::string snapshot_name(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "solution_t%.6f.dat", t);
  return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const LineError fail(line_no);
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "problem") {
      if (value.empty()) fail("empty problem; valid ids: " + valid_ids());
      c.problem = value;
    } else if (key == "k") {
      c.k = static_cast<int>(parse_count(value, fail));
    } else if (key == "cells") {
      const auto x = value.find('x');
      c.nx = parse_count(value.substr(0, x), fail);
      c.ny = x == std::string::npos ? 0 : parse_count(value.substr(x + 1), fail);
      if (c.nx == 0 || (x != std::string::npos && c.ny == 0)) fail("cells must be positive");
    } else if (key == "cfl") {
      c.cfl = parse_double(value, fail);
    } else if (key == "tvb_m") {
      c.tvb_m = parse_double(value, fail);
    } else if (key == "tvb") {
      c.tvb = parse_bool(value, fail);
    } else if (key == "bounds") {
      c.bounds = parse_bool(value, fail);
    } else if (key == "flux") {
      if (value == "lf") {
        c.flux = InterfaceFlux::lax_friedrichs;
      } else if (value == "ec") {
        c.flux = InterfaceFlux::entropy_conservative;
      } else {
        fail("flux must be lf or ec");
      }
    } else if (key == "signal_speed") {
      if (value == "physical") {
        c.signal_speed = SignalSpeedModel::physical;
      } else if (value == "light") {
        c.signal_speed = SignalSpeedModel::light_bound;
      } else {
        fail("signal_speed must be physical or light");
      }
    } else if (key == "out") {
      c.out = value;
    } else if (key == "snapshots") {
      c.snapshots.clear();
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) {
        const std::string t = trim(item);
        if (!t.empty()) c.snapshots.push_back(parse_double(t, fail));
      }
    } else if (key == "t_end") {
      c.t_end = parse_double(value, fail);
    } else if (key == "fixed_dt") {
      c.fixed_dt = parse_double(value, fail);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string format_config(const RunConfig& c) {
  std::ostringstream out;
  out << "problem = " << c.problem << '\n';
  out << "k = " << c.k << '\n';
  out << "cells = " << c.nx;
  if (c.ny != 0) out << 'x' << c.ny;
  out << '\n';
  out << "cfl = " << fmt(c.cfl) << '\n';
  out << "tvb_m = " << fmt(c.tvb_m) << '\n';
  out << "tvb = " << (c.tvb ? "true" : "false") << '\n';
  out << "bounds = " << (c.bounds ? "true" : "false") << '\n';
  out << "flux = " << (c.flux == InterfaceFlux::lax_friedrichs ? "lf" : "ec") << '\n';
  out << "signal_speed = "
      << (c.signal_speed == SignalSpeedModel::physical ? "physical" : "light") << '\n';
  out << "out = " << c.out << '\n';
  if (!c.snapshots.empty()) {
    out << "snapshots = ";
    for (std::size_t i = 0; i < c.snapshots.size(); ++i) {
      out << (i ? "," : "") << fmt(c.snapshots[i]);
    }
    out << '\n';
  }
  if (c.t_end) out << "t_end = " << fmt(*c.t_end) << '\n';
  if (c.fixed_dt) out << "fixed_dt = " << fmt(*c.fixed_dt) << '\n';
  return out.str();
}

RunResult simulate(const RunConfig& config) {
  validate(config);
  RunResult result;
  result.config = config;
  result.problem = make_problem(config.problem);
  const ProblemSpec& p = result.problem;
  const QuadratureRule rule = gauss_lobatto(config.k);
  const auto start = std::chrono::steady_clock::now();
  if (p.dimension == 1) {
    Field1D field = project_initial_condition(Grid1D(config.nx, p.xmin, p.xmax), rule, p.ic1, p.gas);
    result.integration = advance(field, config, p, result);
    result.field1 = std::move(field);
  } else {
    const std::size_t ny = config.ny == 0 ? config.nx : config.ny;
    Field2D field = project_initial_condition(Grid2D(config.nx, ny, p.xmin, p.xmax, p.ymin, p.ymax),
                                              rule, p.ic2, p.gas);
    result.integration = advance(field, config, p, result);
    result.field2 = std::move(field);
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string format_solution(const Field1D& field, const GasParams& gas) {
  std::string out = "x rho ux uy p entropy\n";
  char buf[256];
  for (std::size_t e = 0; e < field.element_count(); ++e) {
    for (std::size_t j = 0; j < field.nodes_per_element(); ++j) {
      const PrimitiveState w = cons_to_prim(field.at(e, j), gas);
      std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g %.17g\n",
                    node_coordinate(field.grid(), e, j, field.rule()), w.rho, w.ux, w.uy, w.p,
                    entropy(w, gas));
      out += buf;
    }
  }
  return out;
}

std::string format_solution(const Field2D& field, const GasParams& gas) {
  std::string out = "x y rho ux uy p entropy\n";
  const Grid2D& g = field.grid();
  const std::size_t n = field.rule().size();
  char buf[320];
  for (std::size_t j = 0; j < g.Ny; ++j) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t i = 0; i < g.Nx; ++i) {
        for (std::size_t p = 0; p < n; ++p) {
          const std::size_t e = g.element_index(i, j);
          const std::size_t node = q * n + p;
          const auto [x, y] = node_coordinate(g, e, node, field.rule());
          const PrimitiveState w = cons_to_prim(field.at(e, node), gas);
          std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g %.17g %.17g\n", x, y,
                        w.rho, w.ux, w.uy, w.p, entropy(w, gas));
          out += buf;
        }
      }
    }
  }
  return out;
}

void write_outputs(const RunResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const GasParams& gas = result.problem.gas;
  write_text(dir / "solution.dat", result.field1 ? format_solution(*result.field1, gas)
                                                 : format_solution(*result.field2, gas));
  std::string series = "t total_entropy\n";
  for (const auto& [t, s] : result.entropy) series += fmt(t) + ' ' + fmt(s) + '\n';
  write_text(dir / "entropy.dat", series);
  for (const auto& [t, f] : result.snapshots1) write_text(dir / snapshot_name(t), format_solution(f, gas));
  for (const auto& [t, f] : result.snapshots2) write_text(dir / snapshot_name(t), format_solution(f, gas));

  std::string manifest = format_config(result.config);
  manifest += "# gamma = " + fmt(gas.gamma) + '\n';
  manifest += "# t_final = " + fmt(result.integration.t) + '\n';
  manifest += "# steps = " + std::to_string(result.integration.steps) + '\n';
  manifest += "# wall_time_s = " + fmt(result.wall_seconds) + '\n';
  write_text(dir / "manifest.txt", manifest);
}

RunResult run(const RunConfig& config) {
  RunResult result = simulate(config);
  write_outputs(result, config.out);
  return result;
}

double evaluate_density(const Field1D& field, const GasParams& gas, double x) {
  const Grid1D& g = field.grid();
  const double pos = (x - g.xmin) / g.dx();
  const auto e = static_cast<std::size_t>(
      std::clamp(std::floor(pos), 0.0, static_cast<double>(g.N - 1)));
  const double xi = std::clamp(2.0 * (pos - static_cast<double>(e)) - 1.0, -1.0, 1.0);
  std::vector<double> rho(field.nodes_per_element());
  for (std::size_t j = 0; j < rho.size(); ++j) rho[j] = cons_to_prim(field.at(e, j), gas).rho;
  return interpolate(field.rule(), rho, xi);
}

std::pair<double, double> density_errors(const Field1D& field, const GasParams& gas,
                                         const std::function<double(double)>& reference) {
  const auto& w = field.rule().weights;
  const double half = 0.5 * field.grid().dx();
  double l1 = 0.0, linf = 0.0;
  for (std::size_t e = 0; e < field.element_count(); ++e) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double x = node_coordinate(field.grid(), e, j, field.rule());
      const double d = std::abs(cons_to_prim(field.at(e, j), gas).rho - reference(x));
      l1 += half * w[j] * d;
      linf = std::max(linf, d);
    }
  }
  return {l1, linf};
}

void fill_orders(ErrorReport& report) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    ErrorRow& row = report.rows[r];
    if (r == 0) {
      row.order_l1 = row.order_linf = nan;
      continue;
    }
    const ErrorRow& prev = report.rows[r - 1];
    const double ratio = std::log2(static_cast<double>(row.cells) / static_cast<double>(prev.cells));
    row.order_l1 = std::log2(prev.l1 / row.l1) / ratio;
    row.order_linf = std::log2(prev.linf / row.linf) / ratio;
  }
}

ErrorReport convergence(const RunConfig& config, const std::vector<std::size_t>& resolutions) {
  const ProblemSpec problem = make_problem(config.problem);
  if (!problem.exact || problem.dimension != 1) {
    throw InvalidArgument("problem '" + config.problem + "' has no exact solution");
  }
  ErrorReport report{config.problem, config.k, {}};
  for (std::size_t cells : resolutions) {
    RunConfig c = config;
    c.nx = cells;
    const RunResult r = simulate(c);
    const double t = r.integration.t;
    const auto [l1, linf] =
        density_errors(*r.field1, problem.gas, [&](double x) { return problem.exact(x, t).rho; });
    report.rows.push_back({cells, l1, linf, 0.0, 0.0});
  }
  fill_orders(report);
  return report;
}

ErrorReport self_convergence(const RunConfig& config, const std::vector<std::size_t>& resolutions,
                             std::size_t reference_cells) {
  const ProblemSpec problem = make_problem(config.problem);
  if (problem.dimension != 1) throw InvalidArgument("self-convergence is 1D only");
  RunConfig rc = config;
  rc.nx = reference_cells;
  const RunResult ref = simulate(rc);
  ErrorReport report{config.problem, config.k, {}};
  for (std::size_t cells : resolutions) {
    RunConfig c = config;
    c.nx = cells;
    const RunResult r = simulate(c);
    const auto [l1, linf] = density_errors(*r.field1, problem.gas, [&](double x) {
      return evaluate_density(*ref.field1, problem.gas, x);
    });
    report.rows.push_back({cells, l1, linf, 0.0, 0.0});
  }
  fill_orders(report);
  return report;
}

std::string format_report(const ErrorReport& report) {
  std::string out = "# " + report.problem + ", k = " + std::to_string(report.k) + '\n';
  out += "cells L1 order L_inf order\n";
  char buf[160];
  for (const ErrorRow& row : report.rows) {
    if (std::isnan(row.order_l1)) {
      std::snprintf(buf, sizeof buf, "%zu %.3e - %.3e -\n", row.cells, row.l1, row.linf);
    } else {
      std::snprintf(buf, sizeof buf, "%zu %.3e %.2f %.3e %.2f\n", row.cells, row.l1, row.order_l1,
                    row.linf, row.order_linf);
    }
    out += buf;
  }
  return out;
}

}  // namespace esdg
