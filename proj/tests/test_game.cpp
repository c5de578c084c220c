#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "evogain/game.hpp"
#include "oracles.hpp"

using namespace evogain;

namespace {

// Random game away from the degenerate boundary, so that classification is
// stable under small perturbations of the entries.
PayoffMatrix random_game(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  while (true) {
    PayoffMatrix m{u(rng), u(rng), u(rng), u(rng)};
    if (std::abs(m.a - m.c) > 1e-6 && std::abs(m.d - m.b) > 1e-6) return m;
  }
}

double bisect_mixed_ne(const PayoffMatrix& m) {
  return oracles::bisect(
      [&](double x) {
        const RewardPair r = reward_vector(x, m);
        return r.r1 - r.r2;
      },
      0.0, 1.0);
}

}  // namespace

TEST_SUITE("game") {

TEST_CASE("classification of the named example games") {
  GameClass g = classify({1, 0, 0, 1});
  CHECK(g.variant == GameVariant::Coordination);
  CHECK(g.alpha == doctest::Approx(1.0));
  CHECK(g.beta == doctest::Approx(1.0));
  REQUIRE(g.mixed_ne.has_value());
  CHECK(*g.mixed_ne == doctest::Approx(0.5));

  g = classify({1, 3, 0, 2});
  CHECK(g.variant == GameVariant::DominantAction1);
  CHECK(g.alpha == doctest::Approx(1.0));
  CHECK(g.beta == doctest::Approx(1.0));
  CHECK(!g.mixed_ne.has_value());

  g = classify({0, 1, 1, 0});
  CHECK(g.variant == GameVariant::AntiCoordination);
  REQUIRE(g.mixed_ne.has_value());
  CHECK(*g.mixed_ne == doctest::Approx(0.5));

  g = classify({1, 2, 1, 3});
  CHECK(g.variant == GameVariant::Degenerate);
  CHECK(!g.mixed_ne.has_value());
  CHECK(std::isnan(g.alpha));

  // d == b boundary is degenerate as well.
  CHECK(classify({2, 1, 0, 1}).variant == GameVariant::Degenerate);
}

TEST_CASE("classify rejects non-finite entries") {
  CHECK_THROWS_AS(classify({std::nan(""), 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(classify({1, std::numeric_limits<double>::infinity(), 0, 1}),
                  std::invalid_argument);
}

TEST_CASE("mixed equilibrium against the bisection oracle") {
  CHECK(mixed_ne({3, 0, 0, 1}) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(mixed_ne({3, 0, 0, 1}) ==
        doctest::Approx(bisect_mixed_ne({3, 0, 0, 1})).epsilon(1e-12));

  CHECK(mixed_ne({1, 0, 0, 1}) == doctest::Approx(0.5));

  CHECK(mixed_ne({0, 2, 1, 0}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(mixed_ne({0, 2, 1, 0}) ==
        doctest::Approx(bisect_mixed_ne({0, 2, 1, 0})).epsilon(1e-12));
}

TEST_CASE("mixed equilibrium undefined for dominant and degenerate games") {
  CHECK_THROWS_AS(mixed_ne({1, 3, 0, 2}), std::domain_error);  // dominant
  CHECK_THROWS_AS(mixed_ne({1, 2, 1, 3}), std::domain_error);  // a == c
}

TEST_CASE("reward vector endpoints and mixed point") {
  RewardPair r = reward_vector(1.0, {1, 3, 0, 2});
  CHECK(r.r1 == doctest::Approx(1.0));
  CHECK(r.r2 == doctest::Approx(0.0));

  r = reward_vector(0.0, {1, 3, 0, 2});
  CHECK(r.r1 == doctest::Approx(3.0));
  CHECK(r.r2 == doctest::Approx(2.0));

  r = reward_vector(0.5, {0, 1, 1, 0});
  CHECK(r.r1 == doctest::Approx(0.5));
  CHECK(r.r2 == doctest::Approx(0.5));

  CHECK_THROWS_AS(reward_vector(-0.1, {1, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(reward_vector(1.1, {1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("rewards equalize at the mixed equilibrium") {
  std::mt19937 rng(11);
  int seen = 0;
  while (seen < 100) {
    const PayoffMatrix m = random_game(rng);
    const GameClass g = classify(m);
    if (!g.mixed_ne) continue;
    ++seen;
    const RewardPair r = reward_vector(*g.mixed_ne, m);
    CHECK(std::abs(r.r1 - r.r2) < 1e-12);
  }
}

TEST_CASE("column shifts do not change the game") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const PayoffMatrix m = random_game(rng);
    const double e1 = shift(rng);
    const double e2 = shift(rng);
    const PayoffMatrix shifted{m.a + e1, m.b + e2, m.c + e1, m.d + e2};

    const GameClass g0 = classify(m);
    const GameClass g1 = classify(shifted);
    CHECK(g0.variant == g1.variant);
    if (std::isfinite(g0.alpha)) {
      CHECK(std::abs(g0.alpha - g1.alpha) < 1e-12);
      CHECK(std::abs(g0.beta - g1.beta) < 1e-12);
    }
    REQUIRE(g0.mixed_ne.has_value() == g1.mixed_ne.has_value());
    if (g0.mixed_ne) CHECK(std::abs(*g0.mixed_ne - *g1.mixed_ne) < 1e-12);

    for (int j = 0; j <= 20; ++j) {
      const double x = j / 20.0;
      const RewardPair r0 = reward_vector(x, m);
      const RewardPair r1 = reward_vector(x, shifted);
      CHECK(std::abs((r0.r1 - r0.r2) - (r1.r1 - r1.r2)) < 1e-12);
    }
  }
}

TEST_CASE("relabelling the actions mirrors the classification") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    const PayoffMatrix m = random_game(rng);
    const PayoffMatrix swapped{m.d, m.c, m.b, m.a};
    const GameClass g0 = classify(m);
    const GameClass g1 = classify(swapped);

    switch (g0.variant) {
      case GameVariant::Coordination:
        CHECK(g1.variant == GameVariant::Coordination);
        break;
      case GameVariant::AntiCoordination:
        CHECK(g1.variant == GameVariant::AntiCoordination);
        break;
      case GameVariant::DominantAction1:
        CHECK(g1.variant == GameVariant::DominantAction2);
        break;
      case GameVariant::DominantAction2:
        CHECK(g1.variant == GameVariant::DominantAction1);
        break;
      case GameVariant::Degenerate:
        CHECK(g1.variant == GameVariant::Degenerate);
        break;
    }
    if (std::isfinite(g0.alpha)) {
      CHECK(std::abs(g0.alpha - g1.beta) < 1e-12);
      CHECK(std::abs(g0.beta - g1.alpha) < 1e-12);
    }
    if (g0.mixed_ne) {
      REQUIRE(g1.mixed_ne.has_value());
      CHECK(std::abs(*g1.mixed_ne - (1.0 - *g0.mixed_ne)) < 1e-12);
    }
  }
}

}  // TEST_SUITE
