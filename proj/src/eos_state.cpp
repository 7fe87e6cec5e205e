#include "esdg/eos_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "esdg/errors.hpp"

namespace esdg {

namespace {

constexpr int kMaxRecoveryIterations = 200;

std::string describe(const ConservedState& w) {
  std::ostringstream os;
  os.precision(17);
  os << "(D=" << w.D << ", mx=" << w.mx << ", my=" << w.my << ", E=" << w.E << ")";
  return os.str();
}

}  // namespace

double lorentz_factor(double ux, double uy) {
  const double u2 = ux * ux + uy * uy;
  if (!(u2 < 1.0)) {
    throw SuperluminalError("superluminal velocity: |u|^2 = " + std::to_string(u2));
  }
  return 1.0 / std::sqrt(1.0 - u2);
}

double specific_enthalpy(double rho, double p, double gamma) {
  if (!(rho > 0.0) || !(p >= 0.0)) {
    throw InadmissibleStateError("nonpositive density or negative pressure");
  }
  return 1.0 + gamma / (gamma - 1.0) * p / rho;
}

void check_admissible(const PrimitiveState& prim) {
  if (!(prim.rho > 0.0)) throw InadmissibleStateError("nonpositive density");
  if (!(prim.p > 0.0)) throw InadmissibleStateError("nonpositive pressure");
  if (!(prim.ux * prim.ux + prim.uy * prim.uy < 1.0)) {
    throw SuperluminalError("superluminal velocity");
  }
}

ConservedState prim_to_cons(const PrimitiveState& prim, const GasParams& gas) {
  check_admissible(prim);
  const double lorentz = lorentz_factor(prim.ux, prim.uy);
  const double h = specific_enthalpy(prim.rho, prim.p, gas.gamma);
  const double rho_h_g2 = prim.rho * h * lorentz * lorentz;
  return {lorentz * prim.rho, rho_h_g2 * prim.ux, rho_h_g2 * prim.uy, rho_h_g2 - prim.p};
}

double admissibility_margin(const ConservedState& cons) {
  return cons.E - std::sqrt(cons.D * cons.D + cons.mx * cons.mx + cons.my * cons.my);
}

bool is_admissible(const ConservedState& cons) {
  return cons.D > 0.0 && admissibility_margin(cons) > 0.0;
}

PrimitiveState cons_to_prim(const ConservedState& cons, const GasParams& gas, double tol) {
  if (!is_admissible(cons) || !std::isfinite(cons.E) || !std::isfinite(cons.mx) ||
      !std::isfinite(cons.my)) {
    throw InadmissibleStateError("inadmissible conserved state " + describe(cons));
  }
  const double gm1 = gas.gamma - 1.0;
  const double D = cons.D;
  const double E = cons.E;
  const double m2 = cons.mx * cons.mx + cons.my * cons.my;
  // E^2 - D^2 - |m|^2 factored through q to avoid cancellation for cold states.
  const double r = std::sqrt(D * D + m2);
  const double e0 = (E - r) * (E + r);

  // Pressure residual p_eos(p) - p, positive below the root and negative above.
  auto residual = [&](double p, double& slope) {
    const double W = E + p;
    const double s = std::sqrt(W * W - m2);
    const double num = e0 + p * (2.0 * E + p);
    slope = gm1 * (1.0 + m2 / (W * W) - D * m2 / (W * W * s)) - gas.gamma;
    return gm1 * s * num / ((s + D) * W) - gas.gamma * p;
  };

  double lo = 0.0;
  double hi = gm1 * E;
  double slope = 0.0;
  if (residual(hi, slope) > 0.0) {
    throw InadmissibleStateError("pressure root not bracketed for " + describe(cons));
  }
  double p = gm1 * e0 / (2.0 * E);
  if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

  bool converged = false;
  for (int it = 0; it < kMaxRecoveryIterations; ++it) {
    const double f = residual(p, slope);
    if (f > 0.0) {
      lo = p;
    } else if (f < 0.0) {
      hi = p;
    } else {
      converged = true;
      break;
    }
    double next = p - f / slope;
    if (!(slope < 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - p);
    p = next;
    if (step <= tol * p || hi - lo <= tol * p) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("primitive recovery did not converge for " + describe(cons));
  }

  const double W = E + p;
  const double s = std::sqrt(W * W - m2);
  return {D * s / W, cons.mx / W, cons.my / W, p};
}

ThermoDerived thermo(const PrimitiveState& prim, const GasParams& gas) {
  ThermoDerived t;
  t.h = specific_enthalpy(prim.rho, prim.p, gas.gamma);
  t.gamma_lorentz = lorentz_factor(prim.ux, prim.uy);
  t.s = std::log(prim.p) - gas.gamma * std::log(prim.rho);
  t.beta = prim.rho / prim.p;
  t.cs = std::sqrt(gas.gamma * prim.p / (prim.rho * t.h));
  return t;
}

double entropy(const PrimitiveState& prim, const GasParams& gas) {
  const double s = std::log(prim.p) - gas.gamma * std::log(prim.rho);
  return -prim.rho * lorentz_factor(prim.ux, prim.uy) * s / (gas.gamma - 1.0);
}

double entropy_flux(const PrimitiveState& prim, const GasParams& gas, Direction dir) {
  return entropy(prim, gas) * (dir == Direction::x ? prim.ux : prim.uy);
}

EntropyVector entropy_variables(const PrimitiveState& prim, const GasParams& gas) {
  const double lorentz = lorentz_factor(prim.ux, prim.uy);
  const double beta = prim.rho / prim.p;
  const double s = std::log(prim.p) - gas.gamma * std::log(prim.rho);
  const double gb = lorentz * beta;
  return {(gas.gamma - s) / (gas.gamma - 1.0) + beta, prim.ux * gb, prim.uy * gb, -gb};
}

double entropy_potential(const PrimitiveState& prim, Direction dir) {
  return prim.rho * lorentz_factor(prim.ux, prim.uy) *
         (dir == Direction::x ? prim.ux : prim.uy);
}

double sound_speed(const PrimitiveState& prim, const GasParams& gas) {
  const double h = specific_enthalpy(prim.rho, prim.p, gas.gamma);
  return std::sqrt(gas.gamma * prim.p / (prim.rho * h));
}

double max_signal_speed(const PrimitiveState& prim, const GasParams& gas, Direction dir) {
  const double cs = sound_speed(prim, gas);
  const double cs2 = cs * cs;
  const double ud = dir == Direction::x ? prim.ux : prim.uy;
  const double u2 = prim.ux * prim.ux + prim.uy * prim.uy;
  const double disc = (1.0 - u2) * (1.0 - ud * ud - (u2 - ud * ud) * cs2);
  const double root = cs * std::sqrt(std::max(disc, 0.0));
  const double denom = 1.0 - u2 * cs2;
  const double lp = (ud * (1.0 - cs2) + root) / denom;
  const double lm = (ud * (1.0 - cs2) - root) / denom;
  return std::max(std::abs(lp), std::abs(lm));
}

}  // namespace esdg
