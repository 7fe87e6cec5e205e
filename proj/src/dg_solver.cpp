#include "esdg/dg_solver.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "esdg/errors.hpp"
#include "parallel.hpp"

namespace esdg {

namespace {

constexpr std::size_t kMaxNodes = kMaxDegree + 1;

template <class Grid>
std::vector<NodeState> node_states(const DgField<Grid>& field, const GasParams& gas) {
  std::vector<NodeState> nodes(field.values().size());
  const std::size_t per = field.nodes_per_element();
  detail::parallel_for(field.element_count(), [&](std::size_t e) {
    for (std::size_t j = 0; j < per; ++j) {
      const ConservedState& w = field.at(e, j);
      try {
        nodes[e * per + j] = make_node_state(cons_to_prim(w, gas), w, gas);
      } catch (const Error& err) {
        throw InadmissibleStateError("element " + std::to_string(e) + ", node " +
                                     std::to_string(j) + ": " + err.what());
      }
    }
  });
  return nodes;
}

FluxVector interface_flux(const NodeState& left, const NodeState& right, Direction dir,
                          const SolverConfig& config) {
  if (config.interface_flux == InterfaceFlux::entropy_conservative) {
    return ec_flux(left, right, config.gas, dir);
  }
  return lf_flux(left, right, dir, config.signal_speed);
}

// Adds the line operator of one element row (or column) to out[p * stride].
// `line[p]` is the node state at position p along the line; `scale` is 2/dx.
void line_residual(const std::array<const NodeState*, kMaxNodes>& line, const SbpMatrices& sbp,
                   const GasParams& gas, Direction dir, const FluxVector& left_face,
                   const FluxVector& right_face, double scale, ConservedState* out,
                   std::size_t stride) {
  const std::size_t n = sbp.size();
  std::array<FluxVector, kMaxNodes> self{};
  std::array<ConservedState, kMaxNodes> acc{};
  for (std::size_t p = 0; p < n; ++p) self[p] = ec_flux(*line[p], *line[p], gas, dir);

  // sum_l 2 D_pl f*(w_p, w_l), written against f*(w_p, w_p) using the zero row
  // sums of D, so a constant line cancels exactly. Each unordered pair is
  // evaluated once.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t l = p + 1; l < n; ++l) {
      const FluxVector f = ec_flux(*line[p], *line[l], gas, dir);
      acc[p] += (2.0 * sbp.D(p, l)) * (f - self[p]);
      acc[l] += (2.0 * sbp.D(l, p)) * (f - self[l]);
    }
  }
  const auto& w = sbp.rule.weights;
  acc[0] += (1.0 / w[0]) * (line[0]->flux(dir) - left_face);
  acc[n - 1] -= (1.0 / w[n - 1]) * (line[n - 1]->flux(dir) - right_face);

  for (std::size_t p = 0; p < n; ++p) out[p * stride] -= scale * acc[p];
}

}  // namespace

GhostStates1D apply_boundary(const Field1D& field, BoundaryKind bc) {
  const std::size_t last = field.element_count() - 1;
  const std::size_t k = field.nodes_per_element() - 1;
  if (bc == BoundaryKind::periodic) return {field.at(last, k), field.at(0, 0)};
  return {field.at(0, 0), field.at(last, k)};
}

GhostStates2D apply_boundary(const Field2D& field, BoundaryKind bc) {
  const Grid2D& g = field.grid();
  const std::size_t n = field.rule().size();
  const std::size_t k = n - 1;
  const bool periodic = bc == BoundaryKind::periodic;
  GhostStates2D ghosts;
  for (std::size_t j = 0; j < g.Ny; ++j) {
    for (std::size_t q = 0; q < n; ++q) {
      const auto& first = field.at(g.element_index(0, j), q * n);
      const auto& last = field.at(g.element_index(g.Nx - 1, j), q * n + k);
      ghosts.west.push_back(periodic ? last : first);
      ghosts.east.push_back(periodic ? first : last);
    }
  }
  for (std::size_t i = 0; i < g.Nx; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      const auto& first = field.at(g.element_index(i, 0), p);
      const auto& last = field.at(g.element_index(i, g.Ny - 1), k * n + p);
      ghosts.south.push_back(periodic ? last : first);
      ghosts.north.push_back(periodic ? first : last);
    }
  }
  return ghosts;
}

Field1D residual_1d(const Field1D& field, const SbpMatrices& sbp, const SolverConfig& config,
                    BoundaryKind bc) {
  const std::size_t N = field.element_count();
  const std::size_t n = field.nodes_per_element();
  if (n != sbp.size()) throw InvalidArgument("residual_1d: operator/field degree mismatch");
  const std::vector<NodeState> nodes = node_states(field, config.gas);
  const bool periodic = bc == BoundaryKind::periodic;

  // Face f separates elements f-1 and f; faces 0 and N see the boundary.
  std::vector<FluxVector> faces(N + 1);
  detail::parallel_for(N + 1, [&](std::size_t f) {
    const NodeState& right = f == N ? (periodic ? nodes[0] : nodes[N * n - 1]) : nodes[f * n];
    const NodeState& left = f == 0 ? (periodic ? nodes[N * n - 1] : nodes[0]) : nodes[f * n - 1];
    faces[f] = interface_flux(left, right, Direction::x, config);
  });

  Field1D out(field.grid(), field.rule());
  const double scale = 2.0 / field.grid().dx();
  detail::parallel_for(N, [&](std::size_t e) {
    std::array<const NodeState*, kMaxNodes> line{};
    for (std::size_t p = 0; p < n; ++p) line[p] = &nodes[e * n + p];
    line_residual(line, sbp, config.gas, Direction::x, faces[e], faces[e + 1], scale,
                  out.element(e).data(), 1);
  });
  return out;
}

Field2D residual_2d(const Field2D& field, const SbpMatrices& sbp, const SolverConfig& config,
                    BoundaryKind bc) {
  const Grid2D& g = field.grid();
  const std::size_t n = sbp.size();
  const std::size_t k = n - 1;
  const std::size_t per = n * n;
  if (field.rule().size() != n) throw InvalidArgument("residual_2d: operator/field degree mismatch");
  const std::vector<NodeState> nodes = node_states(field, config.gas);
  const bool periodic = bc == BoundaryKind::periodic;
  auto node = [&](std::size_t i, std::size_t j, std::size_t p, std::size_t q) -> const NodeState& {
    return nodes[g.element_index(i, j) * per + q * n + p];
  };

  // x faces: (j, face i in 0..Nx, q) at (j * (Nx+1) + i) * n + q.
  std::vector<FluxVector> xfaces(g.Ny * (g.Nx + 1) * n);
  detail::parallel_for(g.Ny, [&](std::size_t j) {
    for (std::size_t i = 0; i <= g.Nx; ++i) {
      for (std::size_t q = 0; q < n; ++q) {
        const NodeState& left = i == 0 ? (periodic ? node(g.Nx - 1, j, k, q) : node(0, j, 0, q))
                                       : node(i - 1, j, k, q);
        const NodeState& right = i == g.Nx ? (periodic ? node(0, j, 0, q) : node(g.Nx - 1, j, k, q))
                                           : node(i, j, 0, q);
        xfaces[(j * (g.Nx + 1) + i) * n + q] = interface_flux(left, right, Direction::x, config);
      }
    }
  });
  // y faces: (face j in 0..Ny, i, p) at (j * Nx + i) * n + p.
  std::vector<FluxVector> yfaces((g.Ny + 1) * g.Nx * n);
  detail::parallel_for(g.Ny + 1, [&](std::size_t j) {
    for (std::size_t i = 0; i < g.Nx; ++i) {
      for (std::size_t p = 0; p < n; ++p) {
        const NodeState& below = j == 0 ? (periodic ? node(i, g.Ny - 1, p, k) : node(i, 0, p, 0))
                                        : node(i, j - 1, p, k);
        const NodeState& above = j == g.Ny ? (periodic ? node(i, 0, p, 0) : node(i, g.Ny - 1, p, k))
                                           : node(i, j, p, 0);
        yfaces[(j * g.Nx + i) * n + p] = interface_flux(below, above, Direction::y, config);
      }
    }
  });

  Field2D out(g, field.rule());
  const double sx = 2.0 / g.dx();
  const double sy = 2.0 / g.dy();
  detail::parallel_for(g.element_count(), [&](std::size_t e) {
    const std::size_t i = e % g.Nx;
    const std::size_t j = e / g.Nx;
    ConservedState* dst = out.element(e).data();
    std::array<const NodeState*, kMaxNodes> line{};
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t p = 0; p < n; ++p) line[p] = &nodes[e * per + q * n + p];
      line_residual(line, sbp, config.gas, Direction::x, xfaces[(j * (g.Nx + 1) + i) * n + q],
                    xfaces[(j * (g.Nx + 1) + i + 1) * n + q], sx, dst + q * n, 1);
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) line[q] = &nodes[e * per + q * n + p];
      line_residual(line, sbp, config.gas, Direction::y, yfaces[(j * g.Nx + i) * n + p],
                    yfaces[((j + 1) * g.Nx + i) * n + p], sy, dst + p, n);
    }
  });
  return out;
}

double total_entropy(const Field1D& field, const GasParams& gas) {
  const auto& w = field.rule().weights;
  const double half = 0.5 * field.grid().dx();
  double total = 0.0;
  for (std::size_t e = 0; e < field.element_count(); ++e) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      total += half * w[j] * entropy(cons_to_prim(field.at(e, j), gas), gas);
    }
  }
  return total;
}

double total_entropy(const Field2D& field, const GasParams& gas) {
  const auto& w = field.rule().weights;
  const std::size_t n = w.size();
  const double quarter = 0.25 * field.grid().dx() * field.grid().dy();
  double total = 0.0;
  for (std::size_t e = 0; e < field.element_count(); ++e) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t p = 0; p < n; ++p) {
        total += quarter * w[p] * w[q] * entropy(cons_to_prim(field.at(e, q * n + p), gas), gas);
      }
    }
  }
  return total;
}

double semidiscrete_entropy_rate(const Field1D& field, const Field1D& residual,
                                 const GasParams& gas) {
  const auto& w = field.rule().weights;
  const double half = 0.5 * field.grid().dx();
  double rate = 0.0;
  for (std::size_t e = 0; e < field.element_count(); ++e) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const EntropyVector v = entropy_variables(cons_to_prim(field.at(e, j), gas), gas);
      rate += half * w[j] * dot(v, residual.at(e, j));
    }
  }
  return rate;
}

double semidiscrete_entropy_rate(const Field2D& field, const Field2D& residual,
                                 const GasParams& gas) {
  const auto& w = field.rule().weights;
  const std::size_t n = w.size();
  const double quarter = 0.25 * field.grid().dx() * field.grid().dy();
  double rate = 0.0;
  for (std::size_t e = 0; e < field.element_count(); ++e) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t node = q * n + p;
        const EntropyVector v = entropy_variables(cons_to_prim(field.at(e, node), gas), gas);
        rate += quarter * w[p] * w[q] * dot(v, residual.at(e, node));
      }
    }
  }
  return rate;
}

double max_wave_speed(const Field1D& field, const SolverConfig& config) {
  if (config.signal_speed == SignalSpeedModel::light_bound) return 1.0;
  double lambda = 0.0;
  for (const ConservedState& w : field.values()) {
    lambda = std::max(lambda, max_signal_speed(cons_to_prim(w, config.gas), config.gas, Direction::x));
  }
  return lambda;
}

std::pair<double, double> max_wave_speed(const Field2D& field, const SolverConfig& config) {
  if (config.signal_speed == SignalSpeedModel::light_bound) return {1.0, 1.0};
  double lx = 0.0, ly = 0.0;
  for (const ConservedState& w : field.values()) {
    const PrimitiveState prim = cons_to_prim(w, config.gas);
    lx = std::max(lx, max_signal_speed(prim, config.gas, Direction::x));
    ly = std::max(ly, max_signal_speed(prim, config.gas, Direction::y));
  }
  return {lx, ly};
}

double compute_dt(const Field1D& field, const SolverConfig& config) {
  return config.cfl * field.grid().dx() / max_wave_speed(field, config);
}

double compute_dt(const Field2D& field, const SolverConfig& config) {
  const auto [lx, ly] = max_wave_speed(field, config);
  return config.cfl / (lx / field.grid().dx() + ly / field.grid().dy());
}

}  // namespace esdg
