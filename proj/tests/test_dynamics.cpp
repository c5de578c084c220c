#include <doctest.h>

#include <cmath>
#include <random>

#include "evogain/dynamics.hpp"
#include "oracles.hpp"

using namespace evogain;

namespace {

ControlledSystem coordination_system(double k, double h, double g0 = 0.2) {
  return make_system({1, 0, 0, 1},
                     {ControlMatrix::g1(), AdaptationFamily::Phi1, k, h, g0});
}

ControlledSystem pd_system(double k, double h, double g0 = 0.2) {
  return make_system({1, 3, 0, 2},
                     {ControlMatrix::g2(), AdaptationFamily::Phi2, k, h, g0});
}

ControlledSystem minority_system(double k, double h, double g0 = 0.1) {
  return make_system({0, 1, 1, 0},
                     {ControlMatrix::g2(), AdaptationFamily::Phi2, k, h, g0});
}

ControlledSystem random_system(std::mt19937& rng) {
  std::uniform_real_distribution<double> payoff(-3.0, 3.0);
  std::uniform_real_distribution<double> pos(0.1, 2.0);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> fam(0, 2);
  PayoffMatrix m{payoff(rng), payoff(rng), payoff(rng), payoff(rng)};
  ControllerSpec spec;
  spec.matrix = {bit(rng), bit(rng), bit(rng), bit(rng)};
  const int f = fam(rng);
  if (f > 0) {
    spec.family = f == 1 ? AdaptationFamily::Phi1 : AdaptationFamily::Phi2;
    spec.k = pos(rng);
    spec.h = pos(rng);
    spec.g0 = pos(rng);
  }
  return make_system(m, spec);
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("vector field at a hand-evaluated point") {
  // coordination, alpha=beta=1, g1 control, phi1 with k=1, h=0.4:
  // dx = x(1-x)(2x - 1 - gx) = 0.6*0.4*(1.2 - 1 - 0.6) = -0.096
  // dg = k g (x-h) = 1*1*0.2 = 0.2
  const ControlledSystem sys = coordination_system(1.0, 0.4);
  const Derivative d = vector_field(sys, {0.6, 1.0});
  CHECK(d.dx == doctest::Approx(-0.096).epsilon(1e-12));
  CHECK(d.dg == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("boundaries x=0 and x=1 are invariant") {
  std::mt19937 rng(31);
  for (int i = 0; i < 50; ++i) {
    const ControlledSystem sys = random_system(rng);
    for (double g : {0.0, 0.7, 5.0}) {
      CHECK(vector_field(sys, {0.0, g}).dx == 0.0);
      CHECK(vector_field(sys, {1.0, g}).dx == 0.0);
    }
  }
}

TEST_CASE("mixed equilibrium of the uncontrolled minority game is a rest point") {
  const ControlledSystem sys = make_system({0, 1, 1, 0}, ControllerSpec::none());
  const Derivative d = vector_field(sys, {0.5, 0.0});
  CHECK(d.dx == 0.0);
  CHECK(d.dg == 0.0);
}

TEST_CASE("vector field rejects states outside the domain") {
  const ControlledSystem sys = coordination_system(1.0, 0.4);
  CHECK_THROWS_AS(vector_field(sys, {-0.1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(vector_field(sys, {1.1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(vector_field(sys, {0.5, -1.0}), std::invalid_argument);
}

TEST_CASE("general field matches the per-class specializations") {
  // Hand-coded planar systems obtained by inserting each controller design
  // into the replicator bracket, written in the alpha/beta parametrization.
  const double alpha = 1.3, beta = 0.7, k = 0.9, h = 0.25;

  const ControlledSystem coord = make_system(
      {alpha, 0, 0, beta},
      {ControlMatrix::g1(), AdaptationFamily::Phi1, k, h, 0.2});
  const ControlledSystem dom = make_system(
      {alpha, beta, 0, 0},
      {ControlMatrix::g2(), AdaptationFamily::Phi2, k, 2.0, 0.2});
  const ControlledSystem anti = make_system(
      {0, beta, alpha, 0},
      {ControlMatrix::g2(), AdaptationFamily::Phi2, k, 2.0, 0.2});

  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    for (double g : {0.0, 0.5, 2.0}) {
      Derivative d = vector_field(coord, {x, g});
      CHECK(std::abs(d.dx - x * (1 - x) * ((alpha + beta) * x - beta - g * x)) <
            1e-12);
      CHECK(std::abs(d.dg - k * g * (x - h)) < 1e-12);

      d = vector_field(dom, {x, g});
      CHECK(std::abs(d.dx -
                     x * (1 - x) * (alpha * x + (beta - g) * (1 - x))) < 1e-12);
      CHECK(std::abs(d.dg - k * g * x * x) < 1e-12);

      d = vector_field(anti, {x, g});
      CHECK(std::abs(d.dx - x * (1 - x) *
                                (beta - (alpha + beta) * x - g * (1 - x))) <
            1e-12);
      CHECK(std::abs(d.dg - k * g * x * x) < 1e-12);
    }
  }
}

TEST_CASE("relabelling antisymmetry of the uncontrolled field") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> payoff(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const PayoffMatrix m{payoff(rng), payoff(rng), payoff(rng), payoff(rng)};
    const ControlledSystem sys = make_system(m, ControllerSpec::none());
    const ControlledSystem swapped =
        make_system({m.d, m.c, m.b, m.a}, ControllerSpec::none());
    for (int j = 0; j <= 20; ++j) {
      const double x = j / 20.0;
      const double f = vector_field(sys, {x, 0.0}).dx;
      const double f_sw = vector_field(swapped, {1.0 - x, 0.0}).dx;
      CHECK(std::abs(f_sw + f) < 1e-12);
    }
  }
}

TEST_CASE("phi2 gain flow is monotone upward") {
  const ControlledSystem sys = pd_system(2.0, 1.0);
  for (int i = 0; i <= 50; ++i) {
    for (double g : {0.0, 0.3, 4.0}) {
      CHECK(vector_field(sys, {i / 50.0, g}).dg >= 0.0);
    }
  }
}

TEST_CASE("jacobian at the coordination equilibria") {
  const ControlledSystem sys = coordination_system(1.0, 0.4);

  const Jacobian j0 = jacobian(sys, {0.0, 0.0});
  CHECK(j0.dxdx == doctest::Approx(-1.0));
  CHECK(j0.dxdg == doctest::Approx(0.0));
  CHECK(j0.dgdx == doctest::Approx(0.0));
  CHECK(j0.dgdg == doctest::Approx(-0.4));

  const auto eig1 = eigenvalues(jacobian(sys, {1.0, 0.0}));
  CHECK(eig1[0].real() == doctest::Approx(-1.0));
  CHECK(eig1[1].real() == doctest::Approx(0.6));  // k (1 - h)
}

TEST_CASE("analytic jacobian matches central differences") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ux(0.05, 0.95);
  std::uniform_real_distribution<double> ug(0.05, 3.0);
  int checked = 0;
  while (checked < 100) {
    const ControlledSystem sys = random_system(rng);
    for (int p = 0; p < 5; ++p, ++checked) {
      const SystemState s{ux(rng), ug(rng)};
      const Jacobian ja = jacobian(sys, s);
      const Jacobian jn = oracles::finite_difference_jacobian(sys, s);
      const double scale =
          std::max({1.0, std::abs(ja.dxdx), std::abs(ja.dxdg),
                    std::abs(ja.dgdx), std::abs(ja.dgdg)});
      CHECK(std::abs(ja.dxdx - jn.dxdx) / scale < 1e-5);
      CHECK(std::abs(ja.dxdg - jn.dxdg) / scale < 1e-5);
      CHECK(std::abs(ja.dgdx - jn.dgdx) / scale < 1e-5);
      CHECK(std::abs(ja.dgdg - jn.dgdg) / scale < 1e-5);
    }
  }
}

TEST_CASE("jacobian rejects the non-differentiable corner") {
  const ControlledSystem sys = pd_system(2.0, 0.5);  // x^h with h < 1
  CHECK_THROWS_AS(jacobian(sys, {0.0, 1.0}), std::domain_error);
  CHECK_NOTHROW(jacobian(sys, {0.0, 0.0}));  // gain row vanishes at g=0
}

TEST_CASE("equilibria of the controlled coordination system") {
  const Equilibria eq = find_equilibria(coordination_system(1.0, 0.4));
  REQUIRE(eq.points.size() == 3);
  CHECK(!eq.x_zero_gain_ray);
  CHECK(!eq.gain_inert);

  // (0,0) stable, (1,0) saddle, (x*,0) source
  for (const EquilibriumReport& r : eq.points) {
    CHECK(r.point.g == 0.0);
    if (r.point.x == 0.0) {
      CHECK(r.stability == Stability::StableNode);
    } else if (r.point.x == 1.0) {
      CHECK(r.stability == Stability::Saddle);
    } else {
      CHECK(r.point.x == doctest::Approx(0.5));
      CHECK(r.stability == Stability::Source);
    }
  }
}

TEST_CASE("equilibria of the uncontrolled coordination game") {
  const ControlledSystem sys =
      make_system({1, 0, 0, 1}, ControllerSpec::none());
  const Equilibria eq = find_equilibria(sys);
  REQUIRE(eq.points.size() == 3);
  CHECK(eq.gain_inert);
  CHECK(eq.points[0].point.x == doctest::Approx(0.0));
  CHECK(eq.points[1].point.x == doctest::Approx(1.0));
  CHECK(eq.points[2].point.x == doctest::Approx(0.5));
}

TEST_CASE("phi2 systems carry the zero-share gain ray") {
  const Equilibria eq = find_equilibria(pd_system(2.0, 1.0));
  CHECK(eq.x_zero_gain_ray);
  // the ray members are non-hyperbolic: one eigenvalue is exactly zero
  for (const EquilibriumReport& r : eq.points) {
    if (r.point.x == 0.0) CHECK(r.stability == Stability::NonHyperbolic);
  }
}

TEST_CASE("phi1 interior rest point appears only above the threshold share") {
  // h below x*: exactly the three slice equilibria
  CHECK(find_equilibria(coordination_system(1.0, 0.4)).points.size() == 3);
  // h above x*: the x=h line pins an extra positive-gain rest point
  const Equilibria eq = find_equilibria(coordination_system(1.0, 0.6));
  REQUIRE(eq.points.size() == 4);
  const EquilibriumReport& extra = eq.points.back();
  CHECK(extra.point.x == doctest::Approx(0.6));
  CHECK(extra.point.g > 0.0);
  const Derivative d = vector_field(
      coordination_system(1.0, 0.6), extra.point);
  CHECK(std::abs(d.dx) < 1e-12);
  CHECK(std::abs(d.dg) < 1e-12);
}

TEST_CASE("eigenvalues handle the complex pair") {
  Jacobian rot{0.0, -1.0, 1.0, 0.0};
  const auto eig = eigenvalues(rot);
  CHECK(eig[0].real() == doctest::Approx(0.0));
  CHECK(std::abs(eig[0].imag()) == doctest::Approx(1.0));
  CHECK(classify_stability(eig) == Stability::NonHyperbolic);
}

}  // TEST_SUITE
