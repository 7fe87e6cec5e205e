#include "esdg/problems.hpp"

#include <cmath>
#include <numbers>

#include "esdg/errors.hpp"

namespace esdg {

namespace {

constexpr double kPi = std::numbers::pi;

std::string joined_ids() {
  std::string out;
  for (const auto& id : problem_ids()) out += (out.empty() ? "" : ", ") + id;
  return out;
}

ProblemSpec shock_tube(std::string name, PrimitiveState left, PrimitiveState right) {
  ProblemSpec p;
  p.name = std::move(name);
  p.ic1 = [left, right](double x) { return x <= 0.5 ? left : right; };
  return p;
}

// Quadrants listed as (x > 0.5, y > 0.5), (x < 0.5, y > 0.5), (x < 0.5, y < 0.5),
// (x > 0.5, y < 0.5).
ProblemSpec quadrants(std::string name, PrimitiveState ne, PrimitiveState nw, PrimitiveState sw,
                      PrimitiveState se) {
  ProblemSpec p;
  p.name = std::move(name);
  p.dimension = 2;
  p.ic2 = [=](double x, double y) {
    if (y > 0.5) return x > 0.5 ? ne : nw;
    return x > 0.5 ? se : sw;
  };
  return p;
}

// ln((sqrt(g-1) + c) / (sqrt(g-1) - c)) / sqrt(g-1)
double sound_term(double cs, double gamma) {
  const double r = std::sqrt(gamma - 1.0);
  return std::log((r + cs) / (r - cs)) / r;
}

}  // namespace

double riemann_invariant_minus(double u, double cs, double gamma) {
  return std::atanh(u) - sound_term(cs, gamma);
}

ProblemSpec accuracy_test() {
  ProblemSpec p;
  p.name = "accuracy";
  p.bc = BoundaryKind::periodic;
  p.t_end = 2.0;
  p.exact = [](double x, double t) {
    return PrimitiveState{2.0 + std::sin(2.0 * kPi * (x - 0.5 * t)), 0.5, 0.0, 1.0};
  };
  p.ic1 = [exact = p.exact](double x) { return exact(x, 0.0); };
  return p;
}

ProblemSpec isentropic_pulse() {
  ProblemSpec p;
  p.name = "isentropic";
  p.xmin = -0.35;
  p.xmax = 1.0;
  p.t_end = 0.8;
  const double gamma = p.gas.gamma;
  constexpr double L = 0.3;
  constexpr double alpha = 1.0;
  constexpr double K = 100.0;  // p_ref / rho_ref^gamma with (rho_ref, p_ref) = (1, 100)
  const double ref = sound_term(sound_speed({1.0, 0.0, 0.0, K}, p.gas), gamma);
  p.ic1 = [=](double x) {
    const double s = x / L;
    const double f = std::abs(x) < L ? std::pow(s * s - 1.0, 4) : 0.0;
    const double rho = 1.0 + alpha * f;
    const double pressure = K * std::pow(rho, gamma);
    // J- held at its reference value: atanh(u) = T(c) - T(c_ref).
    const double cs = sound_speed({rho, 0.0, 0.0, pressure}, GasParams{gamma});
    const double u = std::tanh(sound_term(cs, gamma) - ref);
    return PrimitiveState{rho, u, 0.0, pressure};
  };
  return p;
}

ProblemSpec riemann_1d(const std::string& id) {
  if (id == "rp1") return shock_tube(id, {1.0, -0.6, 0.0, 10.0}, {10.0, 0.5, 0.0, 20.0});
  if (id == "rp2") return shock_tube(id, {1.0, 0.0, 0.0, 1e3}, {1.0, 0.0, 0.0, 1e-2});
  if (id == "rp3") {
    return shock_tube(id, {10.0, 0.0, 0.0, 40.0 / 3.0}, {1.0, 0.0, 0.0, 2.0 / 3.0 * 1e-6});
  }
  if (id == "rp4") return shock_tube(id, {1.0, 0.9, 0.0, 1.0}, {1.0, 0.0, 0.0, 10.0});
  if (id == "perturb") {
    ProblemSpec p;
    p.name = id;
    p.t_end = 0.35;
    p.ic1 = [](double x) {
      return x <= 0.5 ? PrimitiveState{5.0, 0.0, 0.0, 50.0}
                      : PrimitiveState{2.0 + 0.3 * std::sin(50.0 * x), 0.0, 0.0, 5.0};
    };
    return p;
  }
  if (id == "blast") {
    ProblemSpec p;
    p.name = id;
    p.t_end = 0.43;
    p.gas.gamma = 1.4;
    p.ic1 = [](double x) {
      if (x <= 0.1) return PrimitiveState{1.0, 0.0, 0.0, 1000.0};
      if (x <= 0.9) return PrimitiveState{1.0, 0.0, 0.0, 0.01};
      return PrimitiveState{1.0, 0.0, 0.0, 100.0};
    };
    return p;
  }
  throw InvalidArgument("unknown 1D Riemann problem '" + id + "'");
}

ProblemSpec riemann_2d(const std::string& id) {
  if (id == "rp2d1") {
    return quadrants(id, {0.5, 0.5, -0.5, 5.0}, {1.0, 0.5, 0.5, 5.0}, {3.0, -0.5, 0.5, 5.0},
                     {1.5, -0.5, -0.5, 5.0});
  }
  if (id == "rp2d2") {
    return quadrants(id, {0.1, 0.0, 0.0, 0.01}, {0.1, 0.9, 0.0, 1.0}, {0.5, 0.0, 0.0, 1.0},
                     {0.1, 0.0, 0.9, 1.0});
  }
  if (id == "rp2d3") {
    return quadrants(id, {1.0, 0.0, 0.0, 1.0}, {0.5771, -0.3529, 0.0, 0.4},
                     {1.0, -0.3529, -0.3529, 1.0}, {0.5771, 0.0, -0.3529, 0.4});
  }
  if (id == "rp2d4") {
    return quadrants(id, {0.035145216124503, 0.0, 0.0, 0.162931056509027}, {0.1, 0.7, 0.0, 1.0},
                     {0.5, 0.0, 0.0, 1.0}, {0.1, 0.0, 0.7, 1.0});
  }
  throw InvalidArgument("unknown 2D Riemann problem '" + id + "'");
}

ProblemSpec uniform_flow() {
  ProblemSpec p;
  p.name = "uniform";
  p.bc = BoundaryKind::periodic;
  p.exact = [](double, double) { return PrimitiveState{1.5, 0.4, 0.0, 2.0}; };
  p.ic1 = [](double) { return PrimitiveState{1.5, 0.4, 0.0, 2.0}; };
  return p;
}

const std::vector<std::string>& problem_ids() {
  static const std::vector<std::string> ids{"accuracy", "isentropic", "rp1",   "rp2",
                                            "rp3",      "rp4",        "perturb", "blast",
                                            "rp2d1",    "rp2d2",      "rp2d3", "rp2d4",
                                            "uniform"};
  return ids;
}

ProblemSpec make_problem(const std::string& id) {
  if (id == "accuracy") return accuracy_test();
  if (id == "isentropic") return isentropic_pulse();
  if (id == "uniform") return uniform_flow();
  if (id.rfind("rp2d", 0) == 0) {
    try {
      return riemann_2d(id);
    } catch (const InvalidArgument&) {
    }
  } else {
    try {
      return riemann_1d(id);
    } catch (const InvalidArgument&) {
    }
  }
  throw InvalidArgument("unknown problem '" + id + "'; valid ids: " + joined_ids());
}

}  // namespace esdg
