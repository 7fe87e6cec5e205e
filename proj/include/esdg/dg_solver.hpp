#pragma once

// Semi-discrete entropy-stable nodal DG operators in one and two dimensions.
//
// Per element and node p the 1D residual is
//   dw_p/dt = -(2/dx) [ sum_l 2 D_pl f*(w_p, w_l) - (tau_p/w_p) (f_p - fhat_p) ]
// with f* the two-point entropy-conservative flux and fhat the interface flux,
// nonzero only at the two end nodes. The 2D operator applies the same line
// operator along every x row and y column of an element and sums the two.
//
// Evaluation is two-phase: all interface fluxes are computed first into a face
// buffer, then elements are processed independently.

#include <utility>
#include <vector>

#include "esdg/eos_state.hpp"
#include "esdg/fluxes.hpp"
#include "esdg/grid_field.hpp"
#include "esdg/sbp_operators.hpp"

namespace esdg {

enum class BoundaryKind { periodic, outflow };

enum class InterfaceFlux { lax_friedrichs, entropy_conservative };

struct SolverConfig {
  int k = 2;
  double cfl = 0.1;
  InterfaceFlux interface_flux = InterfaceFlux::lax_friedrichs;
  SignalSpeedModel signal_speed = SignalSpeedModel::physical;
  GasParams gas;
};

/// States seen across the domain boundary: periodic wraps, outflow copies the
/// boundary trace.
struct GhostStates1D {
  ConservedState left;
  ConservedState right;
};

/// Ghost traces along the four sides of a 2D domain. west/east are indexed by
/// global y node (j * (k+1) + q), south/north by global x node (i * (k+1) + p).
struct GhostStates2D {
  std::vector<ConservedState> west;
  std::vector<ConservedState> east;
  std::vector<ConservedState> south;
  std::vector<ConservedState> north;
};

GhostStates1D apply_boundary(const Field1D& field, BoundaryKind bc);
GhostStates2D apply_boundary(const Field2D& field, BoundaryKind bc);

/// Time derivative of every nodal state. Throws InadmissibleStateError naming
/// the element and node of the first inadmissible state found.
Field1D residual_1d(const Field1D& field, const SbpMatrices& sbp, const SolverConfig& config,
                    BoundaryKind bc);
Field2D residual_2d(const Field2D& field, const SbpMatrices& sbp, const SolverConfig& config,
                    BoundaryKind bc);

/// Quadrature integral of the entropy function over the domain.
double total_entropy(const Field1D& field, const GasParams& gas);
double total_entropy(const Field2D& field, const GasParams& gas);

/// d/dt of total_entropy along the semi-discrete flow: the quadrature sum of
/// v_j . (dw/dt)_j.
double semidiscrete_entropy_rate(const Field1D& field, const Field1D& residual,
                                 const GasParams& gas);
double semidiscrete_entropy_rate(const Field2D& field, const Field2D& residual,
                                 const GasParams& gas);

/// Field-global maximum signal speed along `dir` (1 under the light bound).
double max_wave_speed(const Field1D& field, const SolverConfig& config);
std::pair<double, double> max_wave_speed(const Field2D& field, const SolverConfig& config);

/// 1D: cfl dx / lambda. 2D: cfl / (lambda_x/dx + lambda_y/dy).
double compute_dt(const Field1D& field, const SolverConfig& config);
double compute_dt(const Field2D& field, const SolverConfig& config);

}  // namespace esdg
