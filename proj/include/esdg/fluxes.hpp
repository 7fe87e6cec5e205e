#pragma once

// Physical fluxes, the two-point entropy-conservative flux and the
// entropy-stable Lax-Friedrichs interface flux.

#include "esdg/eos_state.hpp"

namespace esdg {

/// How the Lax-Friedrichs dissipation coefficient is chosen.
enum class SignalSpeedModel {
  physical,     ///< max of the acoustic eigenvalues of the two states
  light_bound,  ///< the speed of light, 1
};

/// Everything the flux kernels need about one nodal state. Built once per
/// node per residual evaluation so the pairwise kernels stay cheap.
struct NodeState {
  PrimitiveState prim;
  ConservedState cons;
  double lorentz = 1.0;
  double beta = 1.0;  ///< rho / p
  double mux = 0.0;   ///< lorentz * ux
  double muy = 0.0;   ///< lorentz * uy
  FluxVector fx;
  FluxVector fy;
  double speed_x = 0.0;
  double speed_y = 0.0;

  const FluxVector& flux(Direction dir) const { return dir == Direction::x ? fx : fy; }
  double speed(Direction dir) const { return dir == Direction::x ? speed_x : speed_y; }
};

NodeState make_node_state(const PrimitiveState& prim, const GasParams& gas);
NodeState make_node_state(const PrimitiveState& prim, const ConservedState& cons,
                          const GasParams& gas);

FluxVector physical_flux(const PrimitiveState& prim, const GasParams& gas, Direction dir);

/// (a - b) / (ln a - ln b), continuous at a == b. Throws InvalidArgument for
/// nonpositive arguments.
double log_mean(double a, double b);

/// Two-point entropy-conservative flux. Symmetric, consistent.
FluxVector ec_flux(const PrimitiveState& left, const PrimitiveState& right,
                   const GasParams& gas, Direction dir);
FluxVector ec_flux(const NodeState& left, const NodeState& right, const GasParams& gas,
                   Direction dir);

/// Local Lax-Friedrichs (Rusanov) flux on conserved states.
FluxVector lf_flux(const PrimitiveState& left, const PrimitiveState& right,
                   const GasParams& gas, Direction dir,
                   SignalSpeedModel model = SignalSpeedModel::physical);
FluxVector lf_flux(const NodeState& left, const NodeState& right, Direction dir,
                   SignalSpeedModel model = SignalSpeedModel::physical);

/// (v_R - v_L) . flux - (psi_R - psi_L). Zero for an entropy-conservative
/// flux, nonpositive for an entropy-stable one.
double ec_condition_residual(const PrimitiveState& left, const PrimitiveState& right,
                             const FluxVector& flux, const GasParams& gas, Direction dir);

}  // namespace esdg
