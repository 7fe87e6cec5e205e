#pragma once

// Explicit SSP Runge-Kutta stepping with a post-stage hook (the limiter chain).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "esdg/dg_solver.hpp"
#include "esdg/errors.hpp"
#include "esdg/grid_field.hpp"

namespace esdg {

enum class SspScheme { rk2, rk3 };

/// k = 1 pairs with SSP-RK2, higher degrees with SSP-RK3.
SspScheme scheme_for_degree(int k);

inline double lincomb(double a, double x, double b, double y) { return a * x + b * y; }

/// One SSP step. `rhs(u)` returns L(u); `hook(u)` is applied in place to every
/// stage result, including the last.
///   RK2: u1 = u + dt L(u);  u+ = u/2 + (u1 + dt L(u1))/2
///   RK3: u1 = u + dt L(u);  u2 = 3u/4 + (u1 + dt L(u1))/4;
///        u+ = u/3 + 2(u2 + dt L(u2))/3
template <class State, class Rhs, class Hook>
State ssp_step(const State& u, double dt, Rhs&& rhs, Hook&& hook, SspScheme scheme) {
  State u1 = lincomb(1.0, u, dt, rhs(u));
  hook(u1);
  if (scheme == SspScheme::rk2) {
    State out = lincomb(0.5, u, 0.5, lincomb(1.0, u1, dt, rhs(u1)));
    hook(out);
    return out;
  }
  State u2 = lincomb(0.75, u, 0.25, lincomb(1.0, u1, dt, rhs(u1)));
  hook(u2);
  State out = lincomb(1.0 / 3.0, u, 2.0 / 3.0, lincomb(1.0, u2, dt, rhs(u2)));
  hook(out);
  return out;
}

struct IntegrateOptions {
  double t0 = 0.0;
  double t_end = 0.0;
  SspScheme scheme = SspScheme::rk3;
  double fixed_dt = 0.0;  // > 0 overrides the CFL step
  std::size_t max_steps = 10'000'000;
  std::vector<double> snapshot_times;  // steps are clipped to land on these
};

template <class Grid>
struct IntegrateCallbacks {
  /// Called at t0 and after every step.
  std::function<void(double t, double total_entropy)> on_entropy;
  /// Called at each requested snapshot time inside [t0, t_end].
  std::function<void(double t, const DgField<Grid>&)> on_snapshot;
};

struct IntegrateResult {
  double t = 0.0;
  std::size_t steps = 0;
};

namespace detail {

template <class Fn>
decltype(auto) with_time_context(double t, Fn&& fn) {
  const std::string where = " (t = " + std::to_string(t) + ")";
  try {
    return fn();
  } catch (const InadmissibleStateError& e) {
    throw InadmissibleStateError(e.what() + where);
  } catch (const SuperluminalError& e) {
    throw SuperluminalError(e.what() + where);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(e.what() + where);
  }
}

}  // namespace detail

/// Advances `field` from t0 to exactly t_end. `rhs` and `hook` are as in
/// ssp_step; `cfl_dt(field)` supplies the step unless a fixed step is set.
/// Throws ConvergenceError when the step cap is hit and rethrows solver errors
/// with the failing time attached.
template <class Grid, class Rhs, class Hook, class DtFn>
IntegrateResult integrate(DgField<Grid>& field, Rhs&& rhs, Hook&& hook, DtFn&& cfl_dt,
                          const GasParams& gas, const IntegrateOptions& options,
                          const IntegrateCallbacks<Grid>& callbacks = {}) {
  if (!(options.t_end >= options.t0)) throw InvalidArgument("integrate: t_end < t0");
  std::vector<double> stops;
  for (double s : options.snapshot_times) {
    if (s >= options.t0 && s <= options.t_end) stops.push_back(s);
  }
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  std::size_t next_stop = 0;

  IntegrateResult result{options.t0, 0};
  auto emit = [&] {
    if (callbacks.on_entropy) callbacks.on_entropy(result.t, total_entropy(field, gas));
    while (next_stop < stops.size() && stops[next_stop] <= result.t) {
      if (callbacks.on_snapshot) callbacks.on_snapshot(result.t, field);
      ++next_stop;
    }
  };
  emit();

  while (result.t < options.t_end) {
    if (result.steps >= options.max_steps) {
      throw ConvergenceError("step cap of " + std::to_string(options.max_steps) +
                             " reached at t = " + std::to_string(result.t));
    }
    double dt = options.fixed_dt > 0.0
                    ? options.fixed_dt
                    : detail::with_time_context(result.t, [&] { return cfl_dt(field); });
    if (!(dt > 0.0) || !std::isfinite(dt)) {
      throw ConvergenceError("nonpositive time step at t = " + std::to_string(result.t));
    }
    const double target = next_stop < stops.size() ? stops[next_stop] : options.t_end;
    const bool lands = result.t + dt >= target;
    if (lands) dt = target - result.t;
    field = detail::with_time_context(
        result.t, [&] { return ssp_step(field, dt, rhs, hook, options.scheme); });
    result.t = lands ? target : result.t + dt;
    ++result.steps;
    emit();
  }
  return result;
}

}  // namespace esdg
