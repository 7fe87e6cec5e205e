#pragma once

// TVB minmod slope limiter and the bound-preserving scaling limiter.

#include "esdg/dg_solver.hpp"
#include "esdg/grid_field.hpp"

namespace esdg {

struct LimiterConfig {
  double tvb_m = 10.0;  // threshold tvb_m * dx^2
  double eps = 1e-13;   // floor for D and q(w)
};

/// a when |a| <= m dx^2, otherwise the minmod of (a, b, c).
double minmod_tvb(double a, double b, double c, double m, double dx);

/// Componentwise TVB limiting on conserved variables. Cell means across the
/// domain boundary follow `bc` (periodic wraps, outflow repeats the boundary
/// cell). Flagged components are replaced by mean + slope * xi.
void apply_tvb(Field1D& field, const LimiterConfig& config, BoundaryKind bc);
void apply_tvb(Field2D& field, const LimiterConfig& config, BoundaryKind bc);

/// Scales each element toward its mean, w <- mean + theta (w - mean), first
/// for D >= eps and then for q(w) >= eps. Throws InadmissibleStateError when
/// a cell mean violates either bound.
void apply_bounds(Field1D& field, const LimiterConfig& config);
void apply_bounds(Field2D& field, const LimiterConfig& config);

}  // namespace esdg
