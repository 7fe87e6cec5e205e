#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "esdg/errors.hpp"
#include "esdg/eos_state.hpp"
#include "esdg/fluxes.hpp"
#include "random_states.hpp"

using namespace esdg;
using doctest::Approx;

namespace {

const GasParams kGas53{5.0 / 3.0};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Entropy as a function of the conserved state.
double entropy_of_cons(const ConservedState& w, const GasParams& gas) {
  return entropy(cons_to_prim(w, gas, 1e-15), gas);
}

}  // namespace

TEST_CASE("lorentz factor") {
  CHECK(lorentz_factor(0.0, 0.0) == 1.0);
  CHECK(lorentz_factor(0.5, 0.0) == Approx(1.1547005383792515).epsilon(1e-15));
  CHECK_THROWS_AS(lorentz_factor(0.6, 0.8), SuperluminalError);
  CHECK_THROWS_AS(lorentz_factor(1.0, 0.0), SuperluminalError);
}

TEST_CASE("specific enthalpy") {
  CHECK(specific_enthalpy(1.0, 1.0, 5.0 / 3.0) == Approx(3.5).epsilon(1e-15));
  CHECK(specific_enthalpy(2.0, 1.0, 1.4) == Approx(2.75).epsilon(1e-15));
  CHECK(specific_enthalpy(3.0, 1e-300, 1.4) == Approx(1.0));
  CHECK_THROWS_AS(specific_enthalpy(0.0, 1.0, 1.4), InadmissibleStateError);
  CHECK_THROWS_AS(specific_enthalpy(1.0, -1.0, 1.4), InadmissibleStateError);
}

TEST_CASE("prim_to_cons hand-evaluated cases") {
  const ConservedState rest = prim_to_cons({1.0, 0.0, 0.0, 1.0}, kGas53);
  CHECK(rest.D == 1.0);
  CHECK(rest.mx == 0.0);
  CHECK(rest.my == 0.0);
  CHECK(rest.E == Approx(2.5).epsilon(1e-15));

  const ConservedState moving = prim_to_cons({1.0, 0.5, 0.0, 1.0}, kGas53);
  CHECK(moving.D == Approx(1.1547005383792515).epsilon(1e-14));
  CHECK(moving.mx == Approx(7.0 / 3.0).epsilon(1e-14));
  CHECK(moving.my == 0.0);
  CHECK(moving.E == Approx(11.0 / 3.0).epsilon(1e-14));

  CHECK_THROWS_AS(prim_to_cons({-1.0, 0.0, 0.0, 1.0}, kGas53), InadmissibleStateError);
  CHECK_THROWS_AS(prim_to_cons({1.0, 0.0, 0.0, 0.0}, kGas53), InadmissibleStateError);
  CHECK_THROWS_AS(prim_to_cons({1.0, 0.8, 0.6, 1.0}, kGas53), SuperluminalError);
}

TEST_CASE("cons_to_prim inverts the hand-evaluated cases") {
  const PrimitiveState rest = cons_to_prim({1.0, 0.0, 0.0, 2.5}, kGas53);
  CHECK(rest.rho == Approx(1.0).epsilon(1e-13));
  CHECK(rest.ux == 0.0);
  CHECK(rest.p == Approx(1.0).epsilon(1e-13));

  const PrimitiveState moving = cons_to_prim(prim_to_cons({1.0, 0.5, 0.0, 1.0}, kGas53), kGas53);
  CHECK(std::abs(moving.rho - 1.0) <= 1e-10);
  CHECK(std::abs(moving.ux - 0.5) <= 1e-10);
  CHECK(std::abs(moving.uy) <= 1e-10);
  CHECK(std::abs(moving.p - 1.0) <= 1e-10);
}

TEST_CASE("cons_to_prim rejects inadmissible input") {
  CHECK_THROWS_AS(cons_to_prim({1.0, 0.0, 0.0, 0.5}, kGas53), InadmissibleStateError);
  CHECK_THROWS_AS(cons_to_prim({-1.0, 0.0, 0.0, 2.0}, kGas53), InadmissibleStateError);
  CHECK_THROWS_AS(cons_to_prim({1.0, 3.0, 0.0, 3.1}, kGas53), InadmissibleStateError);
}

TEST_CASE("randomized round trip over a wide state range") {
  // rho, p log-uniform in [1e-6, 1e3], |u| <= 0.99. The pressure is only
  // determined by E up to round-off of E itself, so its error is measured
  // against max(p, 1e-5 E): E of a cold state with p/E below that ratio does
  // not carry 10 significant digits of p.
  testing::RandomStates gen(1e-6, 1e3, 0.99);
  double worst_cons = 0.0;
  double worst_prim = 0.0;
  for (const GasParams gas : {GasParams{5.0 / 3.0}, GasParams{1.4}}) {
    for (int i = 0; i < 10000; ++i) {
      const PrimitiveState w = gen();
      const ConservedState u = prim_to_cons(w, gas);
      REQUIRE(is_admissible(u));
      const PrimitiveState back = cons_to_prim(u, gas);
      const ConservedState again = prim_to_cons(back, gas);
      worst_cons = std::max(worst_cons, rel(again.D, u.D));
      worst_cons = std::max(worst_cons, rel(again.E, u.E));
      worst_cons = std::max(worst_cons, std::abs(again.mx - u.mx) / u.E);
      worst_cons = std::max(worst_cons, std::abs(again.my - u.my) / u.E);
      worst_prim = std::max(worst_prim, rel(back.rho, w.rho));
      worst_prim = std::max(worst_prim, std::abs(back.ux - w.ux));
      worst_prim = std::max(worst_prim, std::abs(back.uy - w.uy));
      worst_prim = std::max(worst_prim, std::abs(back.p - w.p) / std::max(w.p, 1e-5 * u.E));
    }
  }
  MESSAGE("round trip: conserved " << worst_cons << ", primitive " << worst_prim);
  CHECK(worst_cons <= 1e-10);
  CHECK(worst_prim <= 1e-10);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible({1.0, 0.0, 0.0, 2.5}));
  CHECK(admissibility_margin({1.0, 0.0, 0.0, 2.5}) == Approx(1.5));
  CHECK_FALSE(is_admissible({1.0, 0.0, 0.0, 0.5}));
  CHECK_FALSE(is_admissible({-1.0, 0.0, 0.0, 2.5}));
  testing::RandomStates gen(1e-6, 1e3, 0.99, 7);
  for (int i = 0; i < 10000; ++i) REQUIRE(is_admissible(prim_to_cons(gen(), kGas53)));
}

TEST_CASE("entropy and entropy flux") {
  CHECK(entropy({1.0, 0.0, 0.0, 1.0}, kGas53) == 0.0);
  CHECK(entropy({1.0, 0.5, 0.0, 1.0}, kGas53) == 0.0);
  CHECK(entropy({2.0, 0.0, 0.0, 1.0}, kGas53) == Approx(3.4657359027997265).epsilon(1e-14));
  CHECK(entropy_flux({3.0, 0.0, 0.0, 2.0}, kGas53, Direction::x) == 0.0);
  CHECK(entropy_flux({1.0, 0.5, 0.0, 1.0}, kGas53, Direction::x) == 0.0);
  testing::RandomStates gen(0.1, 10.0, 0.9, 11);
  for (int i = 0; i < 1000; ++i) {
    const PrimitiveState w = gen();
    const double U = entropy(w, kGas53);
    CHECK(std::abs(entropy_flux(w, kGas53, Direction::x) - U * w.ux) <= 1e-14 * (1 + std::abs(U)));
    CHECK(std::abs(entropy_flux(w, kGas53, Direction::y) - U * w.uy) <= 1e-14 * (1 + std::abs(U)));
  }
}

TEST_CASE("entropy variables") {
  const EntropyVector v = entropy_variables({1.0, 0.0, 0.0, 1.0}, kGas53);
  CHECK(v.v0 == Approx(3.5).epsilon(1e-15));
  CHECK(v.v1 == 0.0);
  CHECK(v.v2 == 0.0);
  CHECK(v.v3 == -1.0);

  testing::RandomStates gen(0.1, 10.0, 0.9, 13);
  for (int i = 0; i < 200; ++i) {
    const PrimitiveState w = gen();
    const EntropyVector ev = entropy_variables(w, kGas53);
    CHECK(ev.v3 < 0.0);
    CHECK(std::abs(ev.v1 * w.uy - ev.v2 * w.ux) <= 1e-13 * (1 + std::abs(ev.v1 * w.uy)));

    // Central differences of U(w) with respect to the conserved state.
    const ConservedState u = prim_to_cons(w, kGas53);
    const double h = 1e-6 * u.E;
    const double exact[4] = {ev.v0, ev.v1, ev.v2, ev.v3};
    double scale = 0.0;
    for (double e : exact) scale = std::max(scale, std::abs(e));
    for (std::size_t c = 0; c < 4; ++c) {
      ConservedState up = u, dn = u;
      up[c] += h;
      dn[c] -= h;
      const double fd = (entropy_of_cons(up, kGas53) - entropy_of_cons(dn, kGas53)) / (2 * h);
      CHECK(std::abs(fd - exact[c]) <= 1e-5 * scale);
    }
  }
}

TEST_CASE("entropy potential") {
  CHECK(entropy_potential({1.0, 0.0, 0.0, 1.0}, Direction::x) == 0.0);
  CHECK(entropy_potential({1.0, 0.5, 0.0, 1.0}, Direction::x) ==
        Approx(0.57735026918962576).epsilon(1e-15));
  testing::RandomStates gen(0.1, 10.0, 0.9, 17);
  for (int i = 0; i < 10000; ++i) {
    const PrimitiveState w = gen();
    const EntropyVector v = entropy_variables(w, kGas53);
    for (Direction d : {Direction::x, Direction::y}) {
      const double psi = entropy_potential(w, d);
      const double via_flux = dot(v, physical_flux(w, kGas53, d)) - entropy_flux(w, kGas53, d);
      const double scale = 1.0 + std::abs(dot(v, physical_flux(w, kGas53, d)));
      REQUIRE(std::abs(psi - via_flux) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("sound speed and signal speeds") {
  const PrimitiveState rest{1.0, 0.0, 0.0, 1.0};
  CHECK(sound_speed(rest, kGas53) == Approx(0.69006555934235422).epsilon(1e-14));
  CHECK(max_signal_speed(rest, kGas53, Direction::x) ==
        Approx(0.69006555934235422).epsilon(1e-14));
  CHECK(max_signal_speed(rest, kGas53, Direction::y) ==
        Approx(0.69006555934235422).epsilon(1e-14));
  CHECK(sound_speed({1.0, 0.0, 0.0, 1e-12}, kGas53) < 1e-5);

  // Approaching the light cone along x drives both eigenvalues to 1.
  CHECK(max_signal_speed({1.0, 1.0 - 1e-9, 0.0, 1.0}, kGas53, Direction::x) ==
        Approx(1.0).epsilon(1e-8));

  testing::RandomStates gen(1e-6, 1e3, 0.99, 19);
  for (int i = 0; i < 10000; ++i) {
    const PrimitiveState w = gen();
    const double cs = sound_speed(w, kGas53);
    REQUIRE(cs > 0.0);
    REQUIRE(cs < 1.0);
    REQUIRE(max_signal_speed(w, kGas53, Direction::x) < 1.0);
    REQUIRE(max_signal_speed(w, kGas53, Direction::y) < 1.0);
  }
}
