#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "esdg/errors.hpp"
#include "esdg/runner.hpp"

namespace {

struct Overrides {
  std::optional<std::string> flux;
  bool no_limiter = false;
  std::optional<std::string> out;
};

void add_overrides(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--flux", o.flux, "Interface flux")->check(CLI::IsMember({"lf", "ec"}));
  cmd.add_flag("--no-limiter", o.no_limiter, "Disable the TVB and bound-preserving limiters");
  cmd.add_option("--out", o.out, "Output directory");
}

esdg::RunConfig configure(const std::string& path, const Overrides& o) {
  esdg::RunConfig c = esdg::load_config(path);
  if (o.flux) {
    c.flux = *o.flux == "ec" ? esdg::InterfaceFlux::entropy_conservative
                             : esdg::InterfaceFlux::lax_friedrichs;
  }
  if (o.no_limiter) c.tvb = c.bounds = false;
  if (o.out) c.out = *o.out;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-stable DG solver for special relativistic hydrodynamics"};
  app.require_subcommand(1);

  std::string run_path;
  Overrides run_over;
  CLI::App* run = app.add_subcommand("run", "Run one configuration and write its output files");
  run->add_option("config", run_path, "Configuration file")->required()->check(CLI::ExistingFile);
  add_overrides(*run, run_over);

  std::string conv_path;
  Overrides conv_over;
  std::vector<std::size_t> resolutions;
  std::size_t reference = 0;
  CLI::App* conv = app.add_subcommand("converge", "Density error table over resolutions");
  conv->add_option("config", conv_path, "Configuration file")->required()->check(CLI::ExistingFile);
  conv->add_option("--resolutions", resolutions, "Cell counts, e.g. 32,64,128")
      ->required()
      ->delimiter(',');
  conv->add_option("--reference", reference,
                   "Cell count of a reference run, for problems without an exact solution");
  add_overrides(*conv, conv_over);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const esdg::RunConfig c = configure(run_path, run_over);
      const esdg::RunResult r = esdg::run(c);
      std::printf("%s: t = %.6g after %zu steps, output in %s\n", c.problem.c_str(),
                  r.integration.t, r.integration.steps, c.out.c_str());
    } else {
      const esdg::RunConfig c = configure(conv_path, conv_over);
      const esdg::ErrorReport report = reference > 0
                                           ? esdg::self_convergence(c, resolutions, reference)
                                           : esdg::convergence(c, resolutions);
      std::fputs(esdg::format_report(report).c_str(), stdout);
    }
  } catch (const std::exception& e) {
    std::cerr << "esdg: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
