#ifndef EVOGAIN_GAME_HPP
#define EVOGAIN_GAME_HPP

#include <optional>
#include <string>

namespace evogain {

/// Payoff matrix of a symmetric 2-action matrix game.
///
/// A player receives `a` or `b` for choosing action 1 against an opponent
/// playing action 1 or 2, and `c` or `d` for choosing action 2 against an
/// opponent playing action 1 or 2.
struct PayoffMatrix {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  bool operator==(const PayoffMatrix&) const = default;
};

bool all_finite(const PayoffMatrix& m);

enum class GameVariant {
  Coordination,     // d > b and a > c: two pure equilibria plus a mixed one
  DominantAction1,  // d < b and a > c: action 1 dominates
  DominantAction2,  // d > b and a < c: action 2 dominates
  AntiCoordination, // d < b and a < c: miscoordination pays
  Degenerate,       // a == c or d == b: outside the strict taxonomy
};

const char* to_string(GameVariant v);

/// Classification verdict with the derived payoff-gap constants.
///
/// alpha and beta are the strictly positive payoff gaps used by the
/// controller designs; they are NaN for degenerate games.  mixed_ne is the
/// interior equilibrium share of action 1 and is present only for
/// coordination and anti-coordination games.
struct GameClass {
  GameVariant variant = GameVariant::Degenerate;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> mixed_ne;
};

/// Classifies a game by the strict orderings of its payoff entries.
/// Equality of a,c or b,d yields Degenerate; no tolerance is applied, the
/// classification is a property of the stated game, not of float noise.
GameClass classify(const PayoffMatrix& m);

/// Interior equilibrium x* = (d-b)/(a+d-b-c).
/// Defined only for coordination and anti-coordination games; throws
/// std::domain_error otherwise.
double mixed_ne(const PayoffMatrix& m);

struct RewardPair {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Average rewards of the two actions when a fraction x of the population
/// plays action 1:  r1 = a*x + b*(1-x),  r2 = c*x + d*(1-x).
/// Requires x in [0,1].
RewardPair reward_vector(double x, const PayoffMatrix& m);

}  // namespace evogain

#endif  // EVOGAIN_GAME_HPP
