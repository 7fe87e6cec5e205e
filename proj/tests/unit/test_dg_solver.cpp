#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "esdg/dg_solver.hpp"
#include "esdg/errors.hpp"
#include "random_states.hpp"

using namespace esdg;
using doctest::Approx;

namespace {

const GasParams kGas{5.0 / 3.0};

double max_norm(const std::vector<ConservedState>& values) {
  double m = 0.0;
  for (const auto& v : values) {
    for (std::size_t c = 0; c < 4; ++c) m = std::max(m, std::abs(v[c]));
  }
  return m;
}

Field1D random_field(std::size_t N, int k, std::uint64_t seed) {
  testing::RandomStates gen(0.1, 10.0, 0.9, seed);
  Field1D f(Grid1D(N, 0.0, 1.0), gauss_lobatto(k));
  for (auto& v : f.values()) v = prim_to_cons(gen(), kGas);
  return f;
}

Field2D random_field_2d(std::size_t N, int k, std::uint64_t seed) {
  testing::RandomStates gen(0.1, 10.0, 0.9, seed);
  Field2D f(Grid2D(N, N, 0.0, 1.0, 0.0, 1.0), gauss_lobatto(k));
  for (auto& v : f.values()) v = prim_to_cons(gen(), kGas);
  return f;
}

// Scale for relative entropy-rate checks: sum of |v . dw/dt| weighted.
double rate_scale(const Field1D& f, const Field1D& r) {
  const auto& w = f.rule().weights;
  double s = 0.0;
  for (std::size_t e = 0; e < f.element_count(); ++e) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const EntropyVector v = entropy_variables(cons_to_prim(f.at(e, j), kGas), kGas);
      const ConservedState& d = r.at(e, j);
      s += 0.5 * f.grid().dx() * w[j] *
           (std::abs(v.v0 * d.D) + std::abs(v.v1 * d.mx) + std::abs(v.v2 * d.my) +
            std::abs(v.v3 * d.E));
    }
  }
  return s;
}

double rate_scale(const Field2D& f, const Field2D& r) {
  const auto& w = f.rule().weights;
  const std::size_t n = w.size();
  double s = 0.0;
  for (std::size_t e = 0; e < f.element_count(); ++e) {
    for (std::size_t node = 0; node < n * n; ++node) {
      const EntropyVector v = entropy_variables(cons_to_prim(f.at(e, node), kGas), kGas);
      const ConservedState& d = r.at(e, node);
      s += 0.25 * f.grid().dx() * f.grid().dy() * w[node % n] * w[node / n] *
           (std::abs(v.v0 * d.D) + std::abs(v.v1 * d.mx) + std::abs(v.v2 * d.my) +
            std::abs(v.v3 * d.E));
    }
  }
  return s;
}

SolverConfig config_with(InterfaceFlux flux, int k = 2) {
  SolverConfig c;
  c.k = k;
  c.interface_flux = flux;
  c.gas = kGas;
  return c;
}

}  // namespace

TEST_CASE("free-stream preservation") {
  const ConservedState w = prim_to_cons({2.5, 0.6, -0.3, 4.0}, kGas);
  for (int k = 1; k <= 4; ++k) {
    const SbpMatrices sbp = make_sbp(k);
    Field1D f(Grid1D(7, 0.0, 1.0), sbp.rule);
    for (auto& v : f.values()) v = w;
    Field2D g(Grid2D(4, 3, 0.0, 1.0, 0.0, 2.0), sbp.rule);
    for (auto& v : g.values()) v = w;
    for (auto flux : {InterfaceFlux::lax_friedrichs, InterfaceFlux::entropy_conservative}) {
      for (auto bc : {BoundaryKind::periodic, BoundaryKind::outflow}) {
        const SolverConfig cfg = config_with(flux, k);
        CHECK(max_norm(residual_1d(f, sbp, cfg, bc).values()) <= 1e-12);
        CHECK(max_norm(residual_2d(g, sbp, cfg, bc).values()) <= 1e-12);
      }
    }
  }
}

TEST_CASE("single element, k = 1, matches the expanded formula") {
  const SbpMatrices sbp = make_sbp(1);
  Field1D f(Grid1D(1, 0.0, 0.5), sbp.rule);
  const PrimitiveState a{1.0, 0.2, 0.1, 2.0};
  const PrimitiveState b{3.0, -0.4, 0.3, 0.5};
  f.at(0, 0) = prim_to_cons(a, kGas);
  f.at(0, 1) = prim_to_cons(b, kGas);
  const SolverConfig cfg = config_with(InterfaceFlux::lax_friedrichs, 1);
  const Field1D r = residual_1d(f, sbp, cfg, BoundaryKind::periodic);

  // D = [[-1/2, 1/2], [-1/2, 1/2]], weights (1, 1), tau = (-1, 1):
  // dw_0/dt = -(2/dx) (f*(a, b) - fhat_L), dw_1/dt = -(2/dx) (fhat_R - f*(a, b)).
  const FluxVector fs = ec_flux(a, b, kGas, Direction::x);
  const FluxVector face = lf_flux(b, a, kGas, Direction::x, SignalSpeedModel::physical);
  const ConservedState r0 = -4.0 * (fs - face);
  const ConservedState r1 = -4.0 * (face - fs);
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(r.at(0, 0)[c] == Approx(r0[c]).epsilon(1e-13).scale(1.0));
    CHECK(r.at(0, 1)[c] == Approx(r1[c]).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("conservation with periodic boundaries") {
  for (int k = 1; k <= 3; ++k) {
    const SbpMatrices sbp = make_sbp(k);
    for (auto flux : {InterfaceFlux::lax_friedrichs, InterfaceFlux::entropy_conservative}) {
      const SolverConfig cfg = config_with(flux, k);
      const Field1D f = random_field(16, k, 11 + k);
      const Field1D r = residual_1d(f, sbp, cfg, BoundaryKind::periodic);
      ConservedState total;
      for (std::size_t e = 0; e < f.element_count(); ++e) total += f.grid().dx() * cell_average(r, e);
      for (std::size_t c = 0; c < 4; ++c) CHECK(std::abs(total[c]) <= 1e-12 * max_norm(r.values()));

      const Field2D g = random_field_2d(5, k, 17 + k);
      const Field2D r2 = residual_2d(g, sbp, cfg, BoundaryKind::periodic);
      ConservedState total2;
      for (std::size_t e = 0; e < g.element_count(); ++e) {
        total2 += g.grid().dx() * g.grid().dy() * cell_average(r2, e);
      }
      for (std::size_t c = 0; c < 4; ++c) {
        CHECK(std::abs(total2[c]) <= 1e-12 * max_norm(r2.values()));
      }
    }
  }
}

TEST_CASE("semi-discrete entropy balance") {
  for (int k = 1; k <= 4; ++k) {
    const SbpMatrices sbp = make_sbp(k);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Field1D f = random_field(12, k, 100 * k + seed);
      const Field1D ec = residual_1d(f, sbp, config_with(InterfaceFlux::entropy_conservative, k),
                                     BoundaryKind::periodic);
      CHECK(std::abs(semidiscrete_entropy_rate(f, ec, kGas)) <= 1e-10 * rate_scale(f, ec));

      const Field1D lf = residual_1d(f, sbp, config_with(InterfaceFlux::lax_friedrichs, k),
                                     BoundaryKind::periodic);
      CHECK(semidiscrete_entropy_rate(f, lf, kGas) <= 1e-10 * rate_scale(f, lf));

      const Field2D g = random_field_2d(4, k, 200 * k + seed);
      const Field2D ec2 = residual_2d(g, sbp, config_with(InterfaceFlux::entropy_conservative, k),
                                      BoundaryKind::periodic);
      CHECK(std::abs(semidiscrete_entropy_rate(g, ec2, kGas)) <= 1e-10 * rate_scale(g, ec2));
      const Field2D lf2 = residual_2d(g, sbp, config_with(InterfaceFlux::lax_friedrichs, k),
                                      BoundaryKind::periodic);
      CHECK(semidiscrete_entropy_rate(g, lf2, kGas) <= 1e-10 * rate_scale(g, lf2));
    }
  }

  // A strong Riemann jump with the luminal dissipation bound.
  const SbpMatrices sbp = make_sbp(2);
  const Field1D rp = project_initial_condition(
      Grid1D(20, 0.0, 1.0), sbp.rule,
      [](double x) {
        return x <= 0.5 ? PrimitiveState{1.0, 0.0, 0.0, 1000.0} : PrimitiveState{1.0, 0.0, 0.0, 0.01};
      },
      kGas);
  SolverConfig cfg = config_with(InterfaceFlux::lax_friedrichs);
  cfg.signal_speed = SignalSpeedModel::light_bound;
  const Field1D r = residual_1d(rp, sbp, cfg, BoundaryKind::periodic);
  CHECK(semidiscrete_entropy_rate(rp, r, kGas) < 0.0);
}

TEST_CASE("y-invariant 2D data reduces to the 1D operator") {
  const SbpMatrices sbp = make_sbp(2);
  const auto ic = [](double x) {
    return PrimitiveState{2.0 + std::sin(2.0 * std::numbers::pi * x), 0.4, 0.2,
                          1.0 + 0.5 * std::cos(2.0 * std::numbers::pi * x)};
  };
  for (auto bc : {BoundaryKind::periodic, BoundaryKind::outflow}) {
    const SolverConfig cfg = config_with(InterfaceFlux::lax_friedrichs);
    const Field1D f = project_initial_condition(Grid1D(8, 0.0, 1.0), sbp.rule, ic, kGas);
    const Field2D g = project_initial_condition(Grid2D(8, 3, 0.0, 1.0, 0.0, 1.0), sbp.rule,
                                                [&](double x, double) { return ic(x); }, kGas);
    const Field1D r = residual_1d(f, sbp, cfg, bc);
    const Field2D r2 = residual_2d(g, sbp, cfg, bc);
    const std::size_t n = sbp.size();
    double diff = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t q = 0; q < n; ++q) {
          for (std::size_t p = 0; p < n; ++p) {
            const ConservedState d = r2.at(g.grid().element_index(i, j), q * n + p) - r.at(i, p);
            for (std::size_t c = 0; c < 4; ++c) diff = std::max(diff, std::abs(d[c]));
          }
        }
      }
    }
    CHECK(diff <= 1e-12 * std::max(1.0, max_norm(r.values())));
  }
}

TEST_CASE("axis exchange symmetry") {
  const SbpMatrices sbp = make_sbp(3);
  const std::size_t n = sbp.size();
  const Field2D g = random_field_2d(4, 3, 77);
  Field2D h = g;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t p = 0; p < n; ++p) {
          ConservedState w = g.at(g.grid().element_index(i, j), q * n + p);
          std::swap(w.mx, w.my);
          h.at(g.grid().element_index(j, i), p * n + q) = w;
        }
      }
    }
  }
  for (auto bc : {BoundaryKind::periodic, BoundaryKind::outflow}) {
    const SolverConfig cfg = config_with(InterfaceFlux::lax_friedrichs, 3);
    const Field2D rg = residual_2d(g, sbp, cfg, bc);
    const Field2D rh = residual_2d(h, sbp, cfg, bc);
    double diff = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t q = 0; q < n; ++q) {
          for (std::size_t p = 0; p < n; ++p) {
            ConservedState a = rg.at(g.grid().element_index(i, j), q * n + p);
            std::swap(a.mx, a.my);
            const ConservedState d = a - rh.at(g.grid().element_index(j, i), p * n + q);
            for (std::size_t c = 0; c < 4; ++c) diff = std::max(diff, std::abs(d[c]));
          }
        }
      }
    }
    CHECK(diff <= 1e-12 * max_norm(rg.values()));
  }
}

TEST_CASE("inadmissible nodes are reported with their location") {
  const SbpMatrices sbp = make_sbp(2);
  Field1D f = random_field(4, 2, 5);
  f.at(2, 1) = {1.0, 5.0, 0.0, 2.0};
  try {
    (void)residual_1d(f, sbp, config_with(InterfaceFlux::lax_friedrichs), BoundaryKind::periodic);
    FAIL("expected an exception");
  } catch (const InadmissibleStateError& e) {
    CHECK(std::string(e.what()).find("element 2, node 1") != std::string::npos);
  }
  CHECK_THROWS_AS(residual_1d(f, make_sbp(3), config_with(InterfaceFlux::lax_friedrichs),
                              BoundaryKind::periodic),
                  InvalidArgument);
}

TEST_CASE("boundary ghosts") {
  Field1D f = random_field(4, 2, 9);
  const GhostStates1D per = apply_boundary(f, BoundaryKind::periodic);
  CHECK(per.left == f.at(3, 2));
  CHECK(per.right == f.at(0, 0));
  const GhostStates1D out = apply_boundary(f, BoundaryKind::outflow);
  CHECK(out.left == f.at(0, 0));
  CHECK(out.right == f.at(3, 2));

  for (auto& v : f.values()) v = prim_to_cons({1.0, 0.1, 0.0, 1.0}, kGas);
  const GhostStates1D a = apply_boundary(f, BoundaryKind::periodic);
  const GhostStates1D b = apply_boundary(f, BoundaryKind::outflow);
  CHECK(a.left == b.left);
  CHECK(a.right == b.right);

  const Field2D g = random_field_2d(3, 1, 4);
  const GhostStates2D p2 = apply_boundary(g, BoundaryKind::periodic);
  const GhostStates2D o2 = apply_boundary(g, BoundaryKind::outflow);
  REQUIRE(p2.west.size() == 6);
  REQUIRE(p2.south.size() == 6);
  // Global y node j*(k+1)+q = 3 is element row 1, q = 1.
  CHECK(p2.west[3] == g.at(g.grid().element_index(2, 1), 1 * 2 + 1));
  CHECK(o2.west[3] == g.at(g.grid().element_index(0, 1), 1 * 2 + 0));
  CHECK(p2.north[4] == g.at(g.grid().element_index(2, 0), 0));
  CHECK(o2.north[4] == g.at(g.grid().element_index(2, 2), 1 * 2 + 0));
}

TEST_CASE("entropy totals") {
  const QuadratureRule rule = gauss_lobatto(2);
  Field1D f(Grid1D(10, 0.0, 1.0), rule);
  for (auto& v : f.values()) v = prim_to_cons({1.0, 0.3, 0.0, 1.0}, kGas);
  CHECK(std::abs(total_entropy(f, kGas)) <= 1e-15);

  const PrimitiveState w{2.0, 0.3, -0.1, 0.7};
  for (auto& v : f.values()) v = prim_to_cons(w, kGas);
  CHECK(total_entropy(f, kGas) == Approx(entropy(w, kGas)).epsilon(1e-13));
  Field2D g(Grid2D(3, 5, 0.0, 1.0, 0.0, 2.0), rule);
  for (auto& v : g.values()) v = prim_to_cons(w, kGas);
  CHECK(total_entropy(g, kGas) == Approx(2.0 * entropy(w, kGas)).epsilon(1e-13));

  const Field1D zero = residual_1d(f, make_sbp(2), config_with(InterfaceFlux::lax_friedrichs),
                                   BoundaryKind::periodic);
  CHECK(std::abs(semidiscrete_entropy_rate(f, zero, kGas)) <= 1e-12);

  // Smooth field: quadrature error shrinks like dx^(2k).
  const auto smooth = [](double x) {
    return PrimitiveState{2.0 + std::sin(2.0 * std::numbers::pi * x), 0.2, 0.0, 1.0};
  };
  const auto total = [&](std::size_t N) {
    return total_entropy(project_initial_condition(Grid1D(N, 0.0, 1.0), rule, smooth, kGas), kGas);
  };
  const double exact = total(512);
  const double e1 = std::abs(total(8) - exact);
  const double e2 = std::abs(total(16) - exact);
  CHECK(std::log2(e1 / e2) > 3.5);
}

TEST_CASE("time step size") {
  const QuadratureRule rule = gauss_lobatto(2);
  Field1D f(Grid1D(100, 0.0, 1.0), rule);
  for (auto& v : f.values()) v = prim_to_cons({1.0, 0.0, 0.0, 1.0}, kGas);
  SolverConfig cfg = config_with(InterfaceFlux::lax_friedrichs);
  CHECK(compute_dt(f, cfg) == Approx(1.4491376746189438e-3).epsilon(1e-13));
  CHECK(compute_dt(f, cfg) == Approx(1.44915e-3).epsilon(1e-5));

  cfg.signal_speed = SignalSpeedModel::light_bound;
  CHECK(compute_dt(f, cfg) == Approx(0.1 * 0.01).epsilon(1e-15));

  cfg.signal_speed = SignalSpeedModel::physical;
  Field2D g(Grid2D(100, 100, 0.0, 1.0, 0.0, 1.0), rule);
  for (auto& v : g.values()) v = prim_to_cons({1.0, 0.0, 0.0, 1.0}, kGas);
  CHECK(compute_dt(g, cfg) == Approx(0.5 * compute_dt(f, cfg)).epsilon(1e-14));
  const auto [lx, ly] = max_wave_speed(g, cfg);
  CHECK(lx == Approx(std::sqrt(10.0 / 21.0)).epsilon(1e-14));
  CHECK(ly == lx);
}
