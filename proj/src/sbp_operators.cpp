#include "esdg/sbp_operators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "esdg/errors.hpp"

namespace esdg {

namespace {

struct LegendreValues {
  double p;   // P_k(x)
  double dp;  // P_k'(x)
  double d2p; // P_k''(x)
};

LegendreValues legendre(int k, double x) {
  double p_prev = 1.0;
  double p = x;
  for (int n = 2; n <= k; ++n) {
    const double p_next = ((2.0 * n - 1.0) * x * p - (n - 1.0) * p_prev) / n;
    p_prev = p;
    p = p_next;
  }
  // Legendre ODE: (1-x^2) P'' - 2x P' + k(k+1) P = 0, and
  // (1-x^2) P' = k (P_{k-1} - x P_k). Only used at interior points.
  const double omx2 = 1.0 - x * x;
  const double dp = k * (p_prev - x * p) / omx2;
  const double d2p = (2.0 * x * dp - k * (k + 1.0) * p) / omx2;
  return {p, dp, d2p};
}

}  // namespace

QuadratureRule gauss_lobatto(int k) {
  if (k < 1 || k > kMaxDegree) {
    throw InvalidArgument("unsupported polynomial degree " + std::to_string(k) +
                          " (supported: 1.." + std::to_string(kMaxDegree) + ")");
  }
  QuadratureRule rule;
  rule.k = k;
  rule.nodes.assign(k + 1, 0.0);
  rule.weights.assign(k + 1, 0.0);
  rule.nodes.front() = -1.0;
  rule.nodes.back() = 1.0;

  // Interior nodes are the roots of P_k'. Newton from Chebyshev-Lobatto guesses,
  // solving only the left half and mirroring to keep exact antisymmetry.
  for (int j = 1; j <= k / 2; ++j) {
    double x = -std::cos(std::numbers::pi * j / k);
    for (int it = 0; it < 100; ++it) {
      const LegendreValues lv = legendre(k, x);
      const double dx = lv.dp / lv.d2p;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[j] = x;
    rule.nodes[k - j] = -x;
  }
  if (k % 2 == 0) rule.nodes[k / 2] = 0.0;

  const double scale = 2.0 / (k * (k + 1.0));
  for (int j = 0; j <= k; ++j) {
    // P_k(+-1) = (+-1)^k; the endpoint formula gives 2/(k(k+1)).
    double pk = 1.0;
    if (j != 0 && j != k) {
      double p_prev = 1.0;
      double p = rule.nodes[j];
      for (int n = 2; n <= k; ++n) {
        const double p_next = ((2.0 * n - 1.0) * rule.nodes[j] * p - (n - 1.0) * p_prev) / n;
        p_prev = p;
        p = p_next;
      }
      pk = p;
    }
    rule.weights[j] = scale / (pk * pk);
  }
  for (int j = 0; j < (k + 1) / 2; ++j) {
    const double w = 0.5 * (rule.weights[j] + rule.weights[k - j]);
    rule.weights[j] = w;
    rule.weights[k - j] = w;
  }
  return rule;
}

SbpMatrices build_sbp(const QuadratureRule& rule) {
  const std::size_t n = rule.size();
  SbpMatrices sbp;
  sbp.rule = rule;
  sbp.D = DenseMatrix(n);
  sbp.M = DenseMatrix(n);
  sbp.S = DenseMatrix(n);
  sbp.B = DenseMatrix(n);
  sbp.tau.assign(n, 0.0);
  sbp.tau.front() = -1.0;
  sbp.tau.back() = 1.0;

  // Barycentric weights of the nodal Lagrange basis.
  std::vector<double> bary(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      if (l != j) bary[j] *= rule.nodes[j] - rule.nodes[l];
    }
    bary[j] = 1.0 / bary[j];
  }
  for (std::size_t j = 0; j < n; ++j) {
    double diag = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      const double d = (bary[l] / bary[j]) / (rule.nodes[j] - rule.nodes[l]);
      sbp.D(j, l) = d;
      diag -= d;
    }
    sbp.D(j, j) = diag;
  }
  for (std::size_t j = 0; j < n; ++j) {
    sbp.M(j, j) = rule.weights[j];
    sbp.B(j, j) = sbp.tau[j];
    for (std::size_t l = 0; l < n; ++l) sbp.S(j, l) = rule.weights[j] * sbp.D(j, l);
  }
  return sbp;
}

SbpMatrices make_sbp(int k) { return build_sbp(gauss_lobatto(k)); }

std::vector<double> differentiate(const SbpMatrices& sbp, std::span<const double> values) {
  const std::size_t n = sbp.size();
  if (values.size() != n) {
    throw InvalidArgument("differentiate: expected " + std::to_string(n) + " nodal values, got " +
                          std::to_string(values.size()));
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t l = 0; l < n; ++l) acc += sbp.D(j, l) * values[l];
    out[j] = acc;
  }
  return out;
}

double interpolate(const QuadratureRule& rule, std::span<const double> values, double xi) {
  double acc = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) {
    double basis = 1.0;
    for (std::size_t l = 0; l < rule.size(); ++l) {
      if (l != j) basis *= (xi - rule.nodes[l]) / (rule.nodes[j] - rule.nodes[l]);
    }
    acc += basis * values[j];
  }
  return acc;
}

}  // namespace esdg
