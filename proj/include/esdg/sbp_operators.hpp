#pragma once

// Gauss-Lobatto quadrature and the summation-by-parts operators built on it.

#include <cstddef>
#include <span>
#include <vector>

namespace esdg {

/// Highest polynomial degree for which operators are built.
inline constexpr int kMaxDegree = 8;

/// k+1 Gauss-Lobatto nodes on [-1, 1] with their weights.
struct QuadratureRule {
  int k = 0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Dense square matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t rows() const { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// D (nodal differentiation), M (diagonal mass), S = MD, B = diag(tau).
/// Immutable once built; share freely between threads.
struct SbpMatrices {
  QuadratureRule rule;
  DenseMatrix D;
  DenseMatrix M;
  DenseMatrix S;
  DenseMatrix B;
  std::vector<double> tau;

  int degree() const { return rule.k; }
  std::size_t size() const { return rule.size(); }
};

/// Throws InvalidArgument unless 1 <= k <= kMaxDegree.
QuadratureRule gauss_lobatto(int k);

SbpMatrices build_sbp(const QuadratureRule& rule);

/// Convenience: build_sbp(gauss_lobatto(k)).
SbpMatrices make_sbp(int k);

/// D * values. Throws InvalidArgument on length mismatch.
std::vector<double> differentiate(const SbpMatrices& sbp, std::span<const double> values);

/// Value at `xi` of the Lagrange interpolant through (nodes, values).
double interpolate(const QuadratureRule& rule, std::span<const double> values, double xi);

}  // namespace esdg
