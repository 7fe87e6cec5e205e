#pragma once

// Catalog of the benchmark problems, addressable by name.

#include <functional>
#include <string>
#include <vector>

#include "esdg/dg_solver.hpp"
#include "esdg/eos_state.hpp"
#include "esdg/grid_field.hpp"

namespace esdg {

using ExactSolution1D = std::function<PrimitiveState(double x, double t)>;

struct ProblemSpec {
  std::string name;
  int dimension = 1;
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;
  GasParams gas;
  BoundaryKind bc = BoundaryKind::outflow;
  double t_end = 0.4;
  InitialCondition1D ic1;  // dimension 1
  InitialCondition2D ic2;  // dimension 2
  ExactSolution1D exact;   // empty when no closed form is available
};

/// Smooth density advection on [0, 1], periodic, t = 2.
ProblemSpec accuracy_test();

/// Isentropic pulse on [-0.35, 1] over the state (1, 0, 100), t = 0.8.
ProblemSpec isentropic_pulse();

/// rp1..rp4, perturb, blast. Nodes exactly on a discontinuity take the state
/// to their left.
ProblemSpec riemann_1d(const std::string& id);

/// rp2d1..rp2d4 on [0, 1]^2. Nodes on x = 0.5 (y = 0.5) take the state on
/// the left (below).
ProblemSpec riemann_2d(const std::string& id);

/// Uniform moving state on [0, 1], periodic, t = 0.4.
ProblemSpec uniform_flow();

/// Any of the above by its identifier.
ProblemSpec make_problem(const std::string& id);

/// Every identifier accepted by make_problem.
const std::vector<std::string>& problem_ids();

/// J- = atanh(u) - ln((sqrt(g-1) + c) / (sqrt(g-1) - c)) / sqrt(g-1).
double riemann_invariant_minus(double u, double cs, double gamma);

}  // namespace esdg
