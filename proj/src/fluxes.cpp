#include "esdg/fluxes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "esdg/errors.hpp"

namespace esdg {

namespace {

// Stable log mean without argument checks, for the hot path. Arguments are
// ordered first so the result is bitwise symmetric.
inline double log_mean_unchecked(double a, double b) {
  if (a < b) std::swap(a, b);
  const double f = (a - b) / (a + b);
  const double u = f * f;
  if (u < 1e-4) {
    return 0.5 * (a + b) / (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0))));
  }
  return (a - b) / std::log(a / b);
}

FluxVector flux_from(const PrimitiveState& prim, const ConservedState& cons, Direction dir) {
  if (dir == Direction::x) {
    return {cons.D * prim.ux, cons.mx * prim.ux + prim.p, cons.my * prim.ux, cons.mx};
  }
  return {cons.D * prim.uy, cons.mx * prim.uy, cons.my * prim.uy + prim.p, cons.my};
}

}  // namespace

NodeState make_node_state(const PrimitiveState& prim, const ConservedState& cons,
                          const GasParams& gas) {
  NodeState n;
  n.prim = prim;
  n.cons = cons;
  n.lorentz = lorentz_factor(prim.ux, prim.uy);
  n.beta = prim.rho / prim.p;
  n.mux = n.lorentz * prim.ux;
  n.muy = n.lorentz * prim.uy;
  n.fx = flux_from(prim, cons, Direction::x);
  n.fy = flux_from(prim, cons, Direction::y);
  n.speed_x = max_signal_speed(prim, gas, Direction::x);
  n.speed_y = max_signal_speed(prim, gas, Direction::y);
  return n;
}

NodeState make_node_state(const PrimitiveState& prim, const GasParams& gas) {
  return make_node_state(prim, prim_to_cons(prim, gas), gas);
}

FluxVector physical_flux(const PrimitiveState& prim, const GasParams& gas, Direction dir) {
  return flux_from(prim, prim_to_cons(prim, gas), dir);
}

double log_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidArgument("log_mean requires positive arguments");
  }
  return log_mean_unchecked(a, b);
}

FluxVector ec_flux(const NodeState& left, const NodeState& right, const GasParams& gas,
                   Direction dir) {
  // The y flux is the x flux of the axis-swapped states with the two momentum
  // components exchanged.
  const bool along_x = dir == Direction::x;
  const double mu_n_l = along_x ? left.mux : left.muy;
  const double mu_n_r = along_x ? right.mux : right.muy;
  const double mu_t_l = along_x ? left.muy : left.mux;
  const double mu_t_r = along_x ? right.muy : right.mux;

  const double rho_hat = log_mean_unchecked(left.prim.rho, right.prim.rho);
  const double beta_hat = log_mean_unchecked(left.beta, right.beta);
  const double rho_bar = 0.5 * (left.prim.rho + right.prim.rho);
  const double beta_bar = 0.5 * (left.beta + right.beta);
  const double mu_n = 0.5 * (mu_n_l + mu_n_r);
  const double mu_t = 0.5 * (mu_t_l + mu_t_r);
  const double lorentz_bar = 0.5 * (left.lorentz + right.lorentz);

  const double k1 = 1.0 + 1.0 / ((gas.gamma - 1.0) * beta_hat);
  const double p_bar = rho_bar / beta_bar;
  const double denom = mu_n * mu_n + mu_t * mu_t - lorentz_bar * lorentz_bar;
  if (std::abs(denom) < std::numeric_limits<double>::epsilon()) {
    throw InadmissibleStateError("degenerate entropy-conservative flux denominator");
  }
  const double energy = -lorentz_bar * (k1 * rho_hat * mu_n + mu_n * p_bar) / denom;
  const double normal = mu_n / lorentz_bar * energy + p_bar;
  const double tangential = mu_t / lorentz_bar * energy;

  if (along_x) return {rho_hat * mu_n, normal, tangential, energy};
  return {rho_hat * mu_n, tangential, normal, energy};
}

FluxVector ec_flux(const PrimitiveState& left, const PrimitiveState& right,
                   const GasParams& gas, Direction dir) {
  return ec_flux(make_node_state(left, gas), make_node_state(right, gas), gas, dir);
}

FluxVector lf_flux(const NodeState& left, const NodeState& right, Direction dir,
                   SignalSpeedModel model) {
  const double alpha = model == SignalSpeedModel::light_bound
                           ? 1.0
                           : std::max(left.speed(dir), right.speed(dir));
  FluxVector f = left.flux(dir) + right.flux(dir);
  f -= alpha * (right.cons - left.cons);
  f *= 0.5;
  return f;
}

FluxVector lf_flux(const PrimitiveState& left, const PrimitiveState& right,
                   const GasParams& gas, Direction dir, SignalSpeedModel model) {
  return lf_flux(make_node_state(left, gas), make_node_state(right, gas), dir, model);
}

double ec_condition_residual(const PrimitiveState& left, const PrimitiveState& right,
                             const FluxVector& flux, const GasParams& gas, Direction dir) {
  const EntropyVector dv = entropy_variables(right, gas) - entropy_variables(left, gas);
  return dot(dv, flux) - (entropy_potential(right, dir) - entropy_potential(left, dir));
}

}  // namespace esdg
