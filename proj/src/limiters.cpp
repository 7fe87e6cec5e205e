#include "esdg/limiters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "esdg/errors.hpp"
#include "parallel.hpp"

namespace esdg {

namespace {

double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

std::size_t wrap_prev(std::size_t i, std::size_t n, bool periodic) {
  if (i > 0) return i - 1;
  return periodic ? n - 1 : 0;
}

std::size_t wrap_next(std::size_t i, std::size_t n, bool periodic) {
  if (i + 1 < n) return i + 1;
  return periodic ? 0 : n - 1;
}

template <class Grid>
std::vector<ConservedState> all_means(const DgField<Grid>& field) {
  std::vector<ConservedState> means(field.element_count());
  detail::parallel_for(means.size(), [&](std::size_t e) { means[e] = cell_average(field, e); });
  return means;
}

// Largest t in [0, 1] with q(mean + t (w - mean)) >= eps, given q(mean) >= eps.
double q_scaling(const ConservedState& mean, const ConservedState& w, double eps) {
  if (admissibility_margin(w) >= eps) return 1.0;
  const ConservedState dw = w - mean;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 64 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (admissibility_margin(mean + mid * dw) >= eps) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void bound_element(std::span<ConservedState> values, const ConservedState& mean, double eps,
                   std::size_t element) {
  if (!(mean.D >= eps) || !(admissibility_margin(mean) >= eps)) {
    throw InadmissibleStateError("cell mean of element " + std::to_string(element) +
                                 " violates the admissibility bounds");
  }
  // Aim a few ulps of the mean above eps so rounding cannot land below it.
  const double floor_d = eps + 4.0 * std::numeric_limits<double>::epsilon() * mean.D;
  double theta = 1.0;
  for (const ConservedState& w : values) {
    if (w.D < eps) theta = std::min(theta, std::max(0.0, (mean.D - floor_d) / (mean.D - w.D)));
  }
  if (theta < 1.0) {
    for (ConservedState& w : values) w = mean + theta * (w - mean);
  }
  theta = 1.0;
  for (const ConservedState& w : values) theta = std::min(theta, q_scaling(mean, w, eps));
  if (theta < 1.0) {
    for (ConservedState& w : values) w = mean + theta * (w - mean);
  }
}

// Face deviations at round-off level of the mean are left alone.
bool keeps(double dev, double fwd, double bwd, double m, double h, double mean) {
  if (std::abs(dev) <= 64.0 * std::numeric_limits<double>::epsilon() * std::abs(mean)) return true;
  return minmod_tvb(dev, fwd, bwd, m, h) == dev;
}

}  // namespace

double minmod_tvb(double a, double b, double c, double m, double dx) {
  if (std::abs(a) <= m * dx * dx) return a;
  return minmod(a, b, c);
}

void apply_tvb(Field1D& field, const LimiterConfig& config, BoundaryKind bc) {
  const std::size_t N = field.element_count();
  const std::size_t k = field.nodes_per_element() - 1;
  const auto& xi = field.rule().nodes;
  const double dx = field.grid().dx();
  const bool periodic = bc == BoundaryKind::periodic;
  const std::vector<ConservedState> means = all_means(field);

  detail::parallel_for(N, [&](std::size_t e) {
    auto values = field.element(e);
    const ConservedState& mean = means[e];
    const ConservedState& prev = means[wrap_prev(e, N, periodic)];
    const ConservedState& next = means[wrap_next(e, N, periodic)];
    for (std::size_t c = 0; c < ConservedState::size; ++c) {
      const double right = values[k][c] - mean[c];
      const double left = mean[c] - values[0][c];
      const double fwd = next[c] - mean[c];
      const double bwd = mean[c] - prev[c];
      if (keeps(right, fwd, bwd, config.tvb_m, dx, mean[c]) &&
          keeps(left, fwd, bwd, config.tvb_m, dx, mean[c])) {
        continue;
      }
      const double slope =
          minmod_tvb(0.5 * (right + left), 0.5 * fwd, 0.5 * bwd, config.tvb_m, dx);
      for (std::size_t j = 0; j <= k; ++j) values[j][c] = mean[c] + slope * xi[j];
    }
  });
}

void apply_tvb(Field2D& field, const LimiterConfig& config, BoundaryKind bc) {
  const Grid2D& g = field.grid();
  const std::size_t n = field.rule().size();
  const std::size_t k = n - 1;
  const auto& xi = field.rule().nodes;
  const auto& w = field.rule().weights;
  const double dx = g.dx();
  const double dy = g.dy();
  const bool periodic = bc == BoundaryKind::periodic;
  const std::vector<ConservedState> means = all_means(field);

  detail::parallel_for(g.element_count(), [&](std::size_t e) {
    const std::size_t i = e % g.Nx;
    const std::size_t j = e / g.Nx;
    auto values = field.element(e);
    const ConservedState& mean = means[e];
    const ConservedState& west = means[g.element_index(wrap_prev(i, g.Nx, periodic), j)];
    const ConservedState& east = means[g.element_index(wrap_next(i, g.Nx, periodic), j)];
    const ConservedState& south = means[g.element_index(i, wrap_prev(j, g.Ny, periodic))];
    const ConservedState& north = means[g.element_index(i, wrap_next(j, g.Ny, periodic))];

    ConservedState face_w, face_e, face_s, face_n;
    for (std::size_t r = 0; r < n; ++r) {
      face_w += (0.5 * w[r]) * values[r * n];
      face_e += (0.5 * w[r]) * values[r * n + k];
      face_s += (0.5 * w[r]) * values[r];
      face_n += (0.5 * w[r]) * values[k * n + r];
    }

    for (std::size_t c = 0; c < ConservedState::size; ++c) {
      const double de = face_e[c] - mean[c];
      const double dw = mean[c] - face_w[c];
      const double dn = face_n[c] - mean[c];
      const double ds = mean[c] - face_s[c];
      const double fx = east[c] - mean[c];
      const double bx = mean[c] - west[c];
      const double fy = north[c] - mean[c];
      const double by = mean[c] - south[c];
      const double m = config.tvb_m;
      if (keeps(de, fx, bx, m, dx, mean[c]) && keeps(dw, fx, bx, m, dx, mean[c]) &&
          keeps(dn, fy, by, m, dy, mean[c]) && keeps(ds, fy, by, m, dy, mean[c])) {
        continue;
      }
      const double sx = minmod_tvb(0.5 * (de + dw), 0.5 * fx, 0.5 * bx, m, dx);
      const double sy = minmod_tvb(0.5 * (dn + ds), 0.5 * fy, 0.5 * by, m, dy);
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t p = 0; p < n; ++p) values[q * n + p][c] = mean[c] + sx * xi[p] + sy * xi[q];
      }
    }
  });
}

void apply_bounds(Field1D& field, const LimiterConfig& config) {
  detail::parallel_for(field.element_count(), [&](std::size_t e) {
    bound_element(field.element(e), cell_average(field, e), config.eps, e);
  });
}

void apply_bounds(Field2D& field, const LimiterConfig& config) {
  detail::parallel_for(field.element_count(), [&](std::size_t e) {
    bound_element(field.element(e), cell_average(field, e), config.eps, e);
  });
}

}  // namespace esdg
