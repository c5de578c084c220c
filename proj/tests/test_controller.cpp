#include <doctest.h>

#include <cmath>
#include <random>

#include "evogain/controller.hpp"

using namespace evogain;

namespace {

ControllerSpec phi1_spec(double k, double h, double g0 = 0.2) {
  return {ControlMatrix::g1(), AdaptationFamily::Phi1, k, h, g0};
}

ControllerSpec phi2_spec(double k, double h, double g0 = 0.2) {
  return {ControlMatrix::g2(), AdaptationFamily::Phi2, k, h, g0};
}

}  // namespace

TEST_SUITE("controller") {

TEST_CASE("adaptation function values") {
  CHECK(phi(phi1_spec(1.0, 0.4), 0.4) == doctest::Approx(0.0));
  CHECK(phi(phi2_spec(2.0, 1.0), 0.0) == 0.0);
  // k * x^h evaluated through an independent pow route
  const double expected = 0.1 * std::pow(0.5, 1.0);
  CHECK(phi(phi2_spec(0.1, 1.0), 0.5) == doctest::Approx(0.05));
  CHECK(phi(phi2_spec(0.1, 1.0), 0.5) == doctest::Approx(expected));
  CHECK(phi(ControllerSpec::none(), 0.7) == 0.0);

  CHECK_THROWS_AS(phi(phi1_spec(1.0, 0.4), -0.01), std::invalid_argument);
  CHECK_THROWS_AS(phi(phi1_spec(1.0, 0.4), 1.01), std::invalid_argument);
}

TEST_CASE("phi1 is affine with slope k, phi2 nonnegative") {
  const ControllerSpec s1 = phi1_spec(1.7, 0.3);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double x1 = u(rng);
    const double x2 = u(rng);
    if (std::abs(x1 - x2) < 1e-6) continue;
    const double slope = (phi(s1, x2) - phi(s1, x1)) / (x2 - x1);
    CHECK(slope == doctest::Approx(1.7).epsilon(1e-9));
  }
  const ControllerSpec s2 = phi2_spec(0.8, 0.5);
  for (int i = 0; i < 50; ++i) {
    const double x = u(rng);
    if (x == 0.0) continue;
    CHECK(phi(s2, x) > 0.0);
  }
  CHECK(phi(s2, 0.0) == 0.0);
}

TEST_CASE("phi derivative") {
  CHECK(phi_prime(phi1_spec(2.0, 0.4), 0.9) == doctest::Approx(2.0));
  CHECK(phi_prime(phi2_spec(2.0, 1.0), 0.0) == doctest::Approx(2.0));
  CHECK(phi_prime(phi2_spec(2.0, 2.0), 0.0) == 0.0);
  CHECK(phi_prime(phi2_spec(3.0, 2.0), 0.5) ==
        doctest::Approx(3.0 * 2.0 * 0.5));
  CHECK_THROWS_AS(phi_prime(phi2_spec(1.0, 0.5), 0.0), std::domain_error);
}

TEST_CASE("effective payoff adds the gated gain entrywise") {
  PayoffMatrix m = effective_payoff({1, 0, 0, 1}, phi1_spec(1, 0.4), 2.0);
  CHECK(m.a == doctest::Approx(1.0));
  CHECK(m.b == doctest::Approx(0.0));
  CHECK(m.c == doctest::Approx(2.0));
  CHECK(m.d == doctest::Approx(1.0));

  // zero gain leaves the nominal payoff untouched, exactly
  const PayoffMatrix nominal{0.3, -1.2, 4.5, 0.0};
  CHECK(effective_payoff(nominal, phi2_spec(1, 1), 0.0) == nominal);

  m = effective_payoff({1, 3, 0, 2}, phi2_spec(2, 1), 1.5);
  CHECK(m.a == doctest::Approx(1.0));
  CHECK(m.b == doctest::Approx(3.0));
  CHECK(m.c == doctest::Approx(0.0));
  CHECK(m.d == doctest::Approx(3.5));

  CHECK_THROWS_AS(effective_payoff(nominal, phi2_spec(1, 1), -0.1),
                  std::invalid_argument);
}

TEST_CASE("effective payoff is affine in the gain") {
  const PayoffMatrix nominal{1, 3, 0, 2};
  const ControllerSpec spec = phi2_spec(2, 1);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    const double g1 = u(rng);
    const double g2 = u(rng);
    const PayoffMatrix sum = effective_payoff(nominal, spec, g1 + g2);
    const PayoffMatrix base = effective_payoff(nominal, spec, g1);
    CHECK(sum.a - base.a == doctest::Approx(spec.matrix.g11 * g2));
    CHECK(sum.b - base.b == doctest::Approx(spec.matrix.g12 * g2));
    CHECK(sum.c - base.c == doctest::Approx(spec.matrix.g21 * g2));
    CHECK(sum.d - base.d == doctest::Approx(spec.matrix.g22 * g2));
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate(phi1_spec(0.0, 0.4)), std::invalid_argument);
  CHECK_THROWS_AS(validate(phi1_spec(1.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(validate(phi1_spec(1.0, 0.4, 0.0)), std::invalid_argument);
  CHECK_NOTHROW(validate(ControllerSpec::none()));
  CHECK_THROWS_AS(validate(ControlMatrix{0, 2, 0, 1}), std::invalid_argument);
}

TEST_CASE("theorem validity verdicts") {
  const GameClass coord = classify({1, 0, 0, 1});
  const GameClass pd = classify({1, 3, 0, 2});
  const GameClass minority = classify({0, 1, 1, 0});

  ValidityVerdict v = check_validity(coord, phi1_spec(1.0, 0.4));
  CHECK(v.theorem == Theorem::Thm1);
  CHECK(v.satisfied);

  v = check_validity(coord, phi1_spec(1.0, 0.6));
  CHECK(v.theorem == Theorem::Thm1);
  CHECK(!v.satisfied);
  CHECK(v.detail.find("h=") != std::string::npos);

  v = check_validity(pd, phi2_spec(2.0, 1.0));
  CHECK(v.theorem == Theorem::Thm2);
  CHECK(v.satisfied);

  v = check_validity(pd, phi2_spec(1.0, 1.0));  // k == alpha, not above it
  CHECK(v.theorem == Theorem::Thm2);
  CHECK(!v.satisfied);

  v = check_validity(minority, phi2_spec(0.1, 1.0));
  CHECK(v.theorem == Theorem::Thm3);
  CHECK(v.satisfied);

  // pairings outside the three designs carry no guarantee
  v = check_validity(coord, phi2_spec(1.0, 1.0));
  CHECK(v.theorem == Theorem::NotApplicable);
  CHECK(!v.satisfied);
}

TEST_CASE("thm1 validity is monotone in h") {
  const GameClass coord = classify({1, 0, 0, 1});
  // the admissible interval is (0, 0.5) here
  for (double h = 0.45; h > 0.01; h -= 0.05) {
    CHECK(check_validity(coord, phi1_spec(1.0, h)).satisfied);
  }
  // once satisfied at some h, any smaller positive h stays satisfied
  const double h_ok = 0.3;
  REQUIRE(check_validity(coord, phi1_spec(2.0, h_ok)).satisfied);
  for (double h = h_ok; h > 0.0; h -= 0.04) {
    CHECK(check_validity(coord, phi1_spec(2.0, h)).satisfied);
  }
}

}  // TEST_SUITE
