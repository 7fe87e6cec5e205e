#pragma once

// State algebra for special relativistic hydrodynamics with an ideal
// (gamma-law) equation of state. Units with c = 1.

#include <cstddef>

namespace esdg {

enum class Direction { x, y };

struct GasParams {
  double gamma = 5.0 / 3.0;
};

/// Lab-frame primitive state (rho, ux, uy, p).
struct PrimitiveState {
  double rho = 1.0;
  double ux = 0.0;
  double uy = 0.0;
  double p = 1.0;
};

/// Evolved quantities (D, mx, my, E). Also used for flux vectors, which share
/// the same component ordering.
struct ConservedState {
  double D = 0.0;
  double mx = 0.0;
  double my = 0.0;
  double E = 0.0;

  static constexpr std::size_t size = 4;

  double& operator[](std::size_t c) {
    switch (c) {
      case 0: return D;
      case 1: return mx;
      case 2: return my;
      default: return E;
    }
  }
  double operator[](std::size_t c) const { return const_cast<ConservedState&>(*this)[c]; }

  ConservedState& operator+=(const ConservedState& o) {
    D += o.D; mx += o.mx; my += o.my; E += o.E;
    return *this;
  }
  ConservedState& operator-=(const ConservedState& o) {
    D -= o.D; mx -= o.mx; my -= o.my; E -= o.E;
    return *this;
  }
  ConservedState& operator*=(double s) {
    D *= s; mx *= s; my *= s; E *= s;
    return *this;
  }

  friend ConservedState operator+(ConservedState a, const ConservedState& b) { return a += b; }
  friend ConservedState operator-(ConservedState a, const ConservedState& b) { return a -= b; }
  friend ConservedState operator*(double s, ConservedState a) { return a *= s; }
  friend ConservedState operator*(ConservedState a, double s) { return a *= s; }
  friend bool operator==(const ConservedState&, const ConservedState&) = default;
};

using FluxVector = ConservedState;

struct ThermoDerived {
  double h = 1.0;              ///< specific enthalpy
  double gamma_lorentz = 1.0;  ///< Lorentz factor
  double s = 0.0;              ///< ln(p rho^-gamma)
  double beta = 1.0;           ///< rho / p
  double cs = 0.0;             ///< sound speed
};

/// Gradient of the entropy function with respect to the conserved state.
struct EntropyVector {
  double v0 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;

  friend EntropyVector operator-(const EntropyVector& a, const EntropyVector& b) {
    return {a.v0 - b.v0, a.v1 - b.v1, a.v2 - b.v2, a.v3 - b.v3};
  }
};

inline double dot(const EntropyVector& v, const ConservedState& f) {
  return v.v0 * f.D + v.v1 * f.mx + v.v2 * f.my + v.v3 * f.E;
}

/// Throws SuperluminalError if ux^2 + uy^2 >= 1.
double lorentz_factor(double ux, double uy);

/// h = 1 + gamma/(gamma-1) p/rho. Throws InadmissibleStateError for rho <= 0 or p < 0.
double specific_enthalpy(double rho, double p, double gamma);

/// Throws if `prim` has rho <= 0, p <= 0 or |u| >= 1.
void check_admissible(const PrimitiveState& prim);

ConservedState prim_to_cons(const PrimitiveState& prim, const GasParams& gas);

/// Recovers the primitive state by a bracketed, safeguarded Newton iteration
/// on the pressure. `tol` is the relative pressure increment at which the
/// iteration stops.
PrimitiveState cons_to_prim(const ConservedState& cons, const GasParams& gas,
                            double tol = 1e-12);

/// q(w) = E - sqrt(D^2 + |m|^2). Concave in w; positive on the admissible set.
double admissibility_margin(const ConservedState& cons);

/// D > 0 and q(w) > 0.
bool is_admissible(const ConservedState& cons);

ThermoDerived thermo(const PrimitiveState& prim, const GasParams& gas);

/// U = -rho Gamma s / (gamma - 1).
double entropy(const PrimitiveState& prim, const GasParams& gas);

/// F_d = U u_d.
double entropy_flux(const PrimitiveState& prim, const GasParams& gas, Direction dir);

EntropyVector entropy_variables(const PrimitiveState& prim, const GasParams& gas);

/// psi_d = rho Gamma u_d.
double entropy_potential(const PrimitiveState& prim, Direction dir);

/// cs^2 = gamma p / (rho h).
double sound_speed(const PrimitiveState& prim, const GasParams& gas);

/// max(|lambda-|, |lambda+|) of the acoustic eigenvalues along `dir`.
double max_signal_speed(const PrimitiveState& prim, const GasParams& gas, Direction dir);

}  // namespace esdg
