#ifndef EVOGAIN_CONTROLLER_HPP
#define EVOGAIN_CONTROLLER_HPP

#include <string>

#include "evogain/game.hpp"

namespace evogain {

/// Binary selector matrix: entry ij = 1 means the gain is added to payoff
/// entry ij of the nominal matrix.
struct ControlMatrix {
  int g11 = 0;
  int g12 = 0;
  int g21 = 0;
  int g22 = 0;

  bool operator==(const ControlMatrix&) const = default;

  /// Rewards action 2 played against action 1 (an incentive for early
  /// adopters of action 2).  Used by the coordination-game design.
  static constexpr ControlMatrix g1() { return {0, 0, 1, 0}; }

  /// Rewards mutual adoption of action 2.  Used by the dominant-strategy
  /// and anti-coordination designs.
  static constexpr ControlMatrix g2() { return {0, 0, 0, 1}; }
};

void validate(const ControlMatrix& g);

enum class AdaptationFamily {
  None,  // no gain dynamics, g frozen
  Phi1,  // phi(x) = k*(x - h): grows above the threshold h, decays below
  Phi2,  // phi(x) = k*x^h:     nonnegative, vanishes only at x = 0
};

const char* to_string(AdaptationFamily f);

/// Full description of an adaptive-gain controller: which payoff entries the
/// gain augments, the adaptation law driving the gain, and its parameters.
struct ControllerSpec {
  ControlMatrix matrix{};
  AdaptationFamily family = AdaptationFamily::None;
  double k = 0.0;   // rate of adaptation
  double h = 0.0;   // Phi1: decay threshold; Phi2: sensitivity exponent
  double g0 = 0.0;  // initial gain, > 0 for active controllers

  static ControllerSpec none() { return {}; }
};

void validate(const ControllerSpec& spec);

/// Adaptation function phi(x); the gain evolves as dg/dt = phi(x) * g.
/// Requires x in [0,1].  For Phi2, x^h is exp(h*ln x) with limit 0 at x=0.
double phi(const ControllerSpec& spec, double x);

/// d phi / dx.  Throws for Phi2 with h < 1 at x = 0 (not differentiable).
double phi_prime(const ControllerSpec& spec, double x);

/// Payoff matrix seen by the population at gain level g >= 0:
/// nominal + matrix * g, entrywise.
PayoffMatrix effective_payoff(const PayoffMatrix& nominal,
                              const ControllerSpec& spec, double g);

enum class Theorem {
  Thm1,  // coordination + g1 + Phi1, h in (0, beta/(alpha+beta)): x->0, g->0
  Thm2,  // dominant action 1 + g2 + Phi2, k > alpha: x->0, g-> constant
  Thm3,  // anti-coordination + g2 + Phi2, any k > 0: x->0, g-> constant
  NotApplicable,
};

const char* to_string(Theorem t);

/// Whether a (game, controller) pairing falls under one of the three proven
/// designs and, if so, whether the sufficient conditions hold.  Conditions
/// are sufficient only: "not satisfied" makes no failure prediction.
struct ValidityVerdict {
  Theorem theorem = Theorem::NotApplicable;
  bool satisfied = false;
  std::string detail;
};

ValidityVerdict check_validity(const GameClass& game,
                               const ControllerSpec& spec);

}  // namespace evogain

#endif  // EVOGAIN_CONTROLLER_HPP
