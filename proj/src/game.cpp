#include "evogain/game.hpp"

#include <cmath>
#include <stdexcept>

namespace evogain {

bool all_finite(const PayoffMatrix& m) {
  return std::isfinite(m.a) && std::isfinite(m.b) && std::isfinite(m.c) &&
         std::isfinite(m.d);
}

const char* to_string(GameVariant v) {
  switch (v) {
    case GameVariant::Coordination: return "coordination";
    case GameVariant::DominantAction1: return "dominant-action-1";
    case GameVariant::DominantAction2: return "dominant-action-2";
    case GameVariant::AntiCoordination: return "anti-coordination";
    case GameVariant::Degenerate: return "degenerate";
  }
  return "?";
}

GameClass classify(const PayoffMatrix& m) {
  if (!all_finite(m)) {
    throw std::invalid_argument("classify: payoff entries must be finite");
  }
  GameClass out;
  const double nan = std::nan("");
  out.alpha = nan;
  out.beta = nan;
  if (m.a == m.c || m.d == m.b) {
    out.variant = GameVariant::Degenerate;
    return out;
  }
  const bool a1 = m.a > m.c;  // action 1 better against a 1-player
  const bool a2 = m.d > m.b;  // action 2 better against a 2-player
  if (a1 && a2) {
    out.variant = GameVariant::Coordination;
    out.alpha = m.a - m.c;
    out.beta = m.d - m.b;
    out.mixed_ne = mixed_ne(m);
  } else if (a1 && !a2) {
    out.variant = GameVariant::DominantAction1;
    out.alpha = m.a - m.c;
    out.beta = m.b - m.d;
  } else if (!a1 && a2) {
    out.variant = GameVariant::DominantAction2;
    out.alpha = m.c - m.a;
    out.beta = m.d - m.b;
  } else {
    out.variant = GameVariant::AntiCoordination;
    out.alpha = m.c - m.a;
    out.beta = m.b - m.d;
    out.mixed_ne = mixed_ne(m);
  }
  return out;
}

double mixed_ne(const PayoffMatrix& m) {
  if (!all_finite(m)) {
    throw std::invalid_argument("mixed_ne: payoff entries must be finite");
  }
  // Interior root of r1(x) = r2(x).  It lies in (0,1) exactly when the two
  // endpoint payoff gaps have the same strict sign.
  const double gap0 = m.b - m.d;  // r1 - r2 at x = 0
  const double gap1 = m.a - m.c;  // r1 - r2 at x = 1
  if (gap0 == 0.0 || gap1 == 0.0 || std::signbit(gap0) == std::signbit(gap1)) {
    throw std::domain_error(
        "mixed_ne: defined only for coordination and anti-coordination games");
  }
  return (m.d - m.b) / (m.a + m.d - m.b - m.c);
}

RewardPair reward_vector(double x, const PayoffMatrix& m) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("reward_vector: x must lie in [0,1]");
  }
  return {m.a * x + m.b * (1.0 - x), m.c * x + m.d * (1.0 - x)};
}

}  // namespace evogain
