#include "esdg/grid_field.hpp"

#include <string>

#include "esdg/errors.hpp"

namespace esdg {

Grid1D::Grid1D(std::size_t cells, double lo, double hi) : N(cells), xmin(lo), xmax(hi) {
  if (cells < 1 || !(hi > lo)) throw InvalidArgument("grid needs N >= 1 and xmax > xmin");
}

Grid2D::Grid2D(std::size_t nx, std::size_t ny, double x0, double x1, double y0, double y1)
    : Nx(nx), Ny(ny), xmin(x0), xmax(x1), ymin(y0), ymax(y1) {
  if (nx < 1 || ny < 1 || !(x1 > x0) || !(y1 > y0)) {
    throw InvalidArgument("grid needs Nx, Ny >= 1 and positive extents");
  }
}

double node_coordinate(const Grid1D& grid, std::size_t element, std::size_t node,
                       const QuadratureRule& rule) {
  if (element >= grid.N || node >= rule.size()) {
    throw InvalidArgument("node_coordinate: index out of range (element " +
                          std::to_string(element) + ", node " + std::to_string(node) + ")");
  }
  const double left = grid.face(element);
  const double right = element + 1 == grid.N ? grid.xmax : grid.face(element + 1);
  // Faces are exact at xi = -1 and xi = 1 so neighboring elements agree bitwise.
  const double xi = rule.nodes[node];
  if (xi == -1.0) return left;
  if (xi == 1.0) return right;
  return 0.5 * (left + right) + 0.5 * xi * (right - left);
}

std::pair<double, double> node_coordinate(const Grid2D& grid, std::size_t element,
                                          std::size_t node, const QuadratureRule& rule) {
  const std::size_t n = rule.size();
  if (element >= grid.element_count() || node >= n * n) {
    throw InvalidArgument("node_coordinate: index out of range");
  }
  const std::size_t i = element % grid.Nx;
  const std::size_t j = element / grid.Nx;
  return {node_coordinate(grid.x_axis(), i, node % n, rule),
          node_coordinate(grid.y_axis(), j, node / n, rule)};
}

ConservedState cell_average(const Field1D& field, std::size_t element) {
  const auto& w = field.rule().weights;
  const auto values = field.element(element);
  ConservedState mean;
  for (std::size_t j = 0; j < values.size(); ++j) mean += w[j] * values[j];
  return 0.5 * mean;
}

ConservedState cell_average(const Field2D& field, std::size_t element) {
  const auto& w = field.rule().weights;
  const std::size_t n = w.size();
  const auto values = field.element(element);
  ConservedState mean;
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) mean += (w[p] * w[q]) * values[q * n + p];
  }
  return 0.25 * mean;
}

namespace {

ConservedState admissible_cons(const PrimitiveState& prim, const GasParams& gas,
                               const std::string& where) {
  try {
    return prim_to_cons(prim, gas);
  } catch (const Error& e) {
    throw InadmissibleStateError("inadmissible initial data at " + where + ": " + e.what());
  }
}

}  // namespace

Field1D project_initial_condition(const Grid1D& grid, const QuadratureRule& rule,
                                  const InitialCondition1D& ic, const GasParams& gas) {
  Field1D field(grid, rule);
  for (std::size_t e = 0; e < grid.N; ++e) {
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double x = node_coordinate(grid, e, j, rule);
      field.at(e, j) = admissible_cons(ic(x), gas, "x = " + std::to_string(x));
    }
  }
  return field;
}

Field2D project_initial_condition(const Grid2D& grid, const QuadratureRule& rule,
                                  const InitialCondition2D& ic, const GasParams& gas) {
  Field2D field(grid, rule);
  for (std::size_t e = 0; e < grid.element_count(); ++e) {
    for (std::size_t node = 0; node < field.nodes_per_element(); ++node) {
      const auto [x, y] = node_coordinate(grid, e, node, rule);
      field.at(e, node) = admissible_cons(
          ic(x, y), gas, "(" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  }
  return field;
}

}  // namespace esdg
