#pragma once

// Uniform structured grids and nodal DG storage.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "esdg/eos_state.hpp"
#include "esdg/sbp_operators.hpp"

namespace esdg {

struct Grid1D {
  static constexpr int dimension = 1;

  std::size_t N = 1;
  double xmin = 0.0;
  double xmax = 1.0;

  Grid1D() = default;
  /// Throws InvalidArgument unless N >= 1 and xmax > xmin.
  Grid1D(std::size_t cells, double lo, double hi);

  double dx() const { return (xmax - xmin) / static_cast<double>(N); }
  std::size_t element_count() const { return N; }
  /// Left face of element i.
  double face(std::size_t i) const { return xmin + static_cast<double>(i) * dx(); }
};

struct Grid2D {
  static constexpr int dimension = 2;

  std::size_t Nx = 1;
  std::size_t Ny = 1;
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;

  Grid2D() = default;
  Grid2D(std::size_t nx, std::size_t ny, double x0, double x1, double y0, double y1);

  double dx() const { return (xmax - xmin) / static_cast<double>(Nx); }
  double dy() const { return (ymax - ymin) / static_cast<double>(Ny); }
  std::size_t element_count() const { return Nx * Ny; }
  /// Element (i, j) is stored at j * Nx + i.
  std::size_t element_index(std::size_t i, std::size_t j) const { return j * Nx + i; }
  Grid1D x_axis() const { return {Nx, xmin, xmax}; }
  Grid1D y_axis() const { return {Ny, ymin, ymax}; }
};

/// Physical coordinate of node `node` in element `element`:
/// the element midpoint plus xi * dx / 2. Throws InvalidArgument when out of range.
double node_coordinate(const Grid1D& grid, std::size_t element, std::size_t node,
                       const QuadratureRule& rule);
std::pair<double, double> node_coordinate(const Grid2D& grid, std::size_t element,
                                          std::size_t node, const QuadratureRule& rule);

/// Nodal conserved states over a grid. Per-element blocks are contiguous;
/// in 2D node (p, q) of an element sits at q * (k+1) + p.
template <class Grid>
class DgField {
 public:
  DgField() = default;
  DgField(Grid grid, QuadratureRule rule)
      : grid_(std::move(grid)), rule_(std::move(rule)),
        nodes_per_element_(Grid::dimension == 1 ? rule_.size() : rule_.size() * rule_.size()),
        values_(grid_.element_count() * nodes_per_element_) {}

  const Grid& grid() const { return grid_; }
  const QuadratureRule& rule() const { return rule_; }
  int degree() const { return rule_.k; }
  std::size_t element_count() const { return grid_.element_count(); }
  std::size_t nodes_per_element() const { return nodes_per_element_; }

  std::span<ConservedState> element(std::size_t e) {
    return {values_.data() + e * nodes_per_element_, nodes_per_element_};
  }
  std::span<const ConservedState> element(std::size_t e) const {
    return {values_.data() + e * nodes_per_element_, nodes_per_element_};
  }
  ConservedState& at(std::size_t e, std::size_t node) {
    return values_[e * nodes_per_element_ + node];
  }
  const ConservedState& at(std::size_t e, std::size_t node) const {
    return values_[e * nodes_per_element_ + node];
  }

  std::vector<ConservedState>& values() { return values_; }
  const std::vector<ConservedState>& values() const { return values_; }

 private:
  Grid grid_;
  QuadratureRule rule_;
  std::size_t nodes_per_element_ = 0;
  std::vector<ConservedState> values_;
};

using Field1D = DgField<Grid1D>;
using Field2D = DgField<Grid2D>;

/// a * x + b * y, elementwise. The fields must share a layout.
template <class Grid>
DgField<Grid> lincomb(double a, const DgField<Grid>& x, double b, const DgField<Grid>& y) {
  DgField<Grid> out = x;
  auto& o = out.values();
  const auto& yv = y.values();
  for (std::size_t n = 0; n < o.size(); ++n) o[n] = a * o[n] + b * yv[n];
  return out;
}

/// Quadrature mean over the reference element: (1/2) sum_j w_j u_j in 1D,
/// (1/4) sum_pq w_p w_q u_pq in 2D.
ConservedState cell_average(const Field1D& field, std::size_t element);
ConservedState cell_average(const Field2D& field, std::size_t element);

using InitialCondition1D = std::function<PrimitiveState(double)>;
using InitialCondition2D = std::function<PrimitiveState(double, double)>;

/// Collocation of prim_to_cons(ic(x)) at the mapped nodes. Throws
/// InadmissibleStateError naming the offending position.
Field1D project_initial_condition(const Grid1D& grid, const QuadratureRule& rule,
                                  const InitialCondition1D& ic, const GasParams& gas);
Field2D project_initial_condition(const Grid2D& grid, const QuadratureRule& rule,
                                  const InitialCondition2D& ic, const GasParams& gas);

}  // namespace esdg
