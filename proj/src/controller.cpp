#include "evogain/controller.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace evogain {

namespace {

bool is_binary(int v) { return v == 0 || v == 1; }

}  // namespace

void validate(const ControlMatrix& g) {
  if (!is_binary(g.g11) || !is_binary(g.g12) || !is_binary(g.g21) ||
      !is_binary(g.g22)) {
    throw std::invalid_argument("control matrix entries must be 0 or 1");
  }
}

const char* to_string(AdaptationFamily f) {
  switch (f) {
    case AdaptationFamily::None: return "none";
    case AdaptationFamily::Phi1: return "phi1";
    case AdaptationFamily::Phi2: return "phi2";
  }
  return "?";
}

void validate(const ControllerSpec& spec) {
  validate(spec.matrix);
  if (spec.family == AdaptationFamily::None) return;
  if (!(spec.k > 0.0) || !std::isfinite(spec.k)) {
    throw std::invalid_argument("controller: k must be positive");
  }
  if (!(spec.h > 0.0) || !std::isfinite(spec.h)) {
    throw std::invalid_argument("controller: h must be positive");
  }
  if (!(spec.g0 > 0.0) || !std::isfinite(spec.g0)) {
    throw std::invalid_argument("controller: initial gain g0 must be positive");
  }
}

double phi(const ControllerSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("phi: x must lie in [0,1]");
  }
  switch (spec.family) {
    case AdaptationFamily::None:
      return 0.0;
    case AdaptationFamily::Phi1:
      return spec.k * (x - spec.h);
    case AdaptationFamily::Phi2:
      return x == 0.0 ? 0.0 : spec.k * std::exp(spec.h * std::log(x));
  }
  return 0.0;
}

double phi_prime(const ControllerSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("phi_prime: x must lie in [0,1]");
  }
  switch (spec.family) {
    case AdaptationFamily::None:
      return 0.0;
    case AdaptationFamily::Phi1:
      return spec.k;
    case AdaptationFamily::Phi2:
      if (x == 0.0) {
        if (spec.h < 1.0) {
          throw std::domain_error(
              "phi_prime: x^h not differentiable at x=0 for h<1");
        }
        return spec.h == 1.0 ? spec.k : 0.0;
      }
      return spec.k * spec.h * std::exp((spec.h - 1.0) * std::log(x));
  }
  return 0.0;
}

PayoffMatrix effective_payoff(const PayoffMatrix& nominal,
                              const ControllerSpec& spec, double g) {
  if (!(g >= 0.0)) {
    throw std::invalid_argument("effective_payoff: gain must be nonnegative");
  }
  return {nominal.a + spec.matrix.g11 * g, nominal.b + spec.matrix.g12 * g,
          nominal.c + spec.matrix.g21 * g, nominal.d + spec.matrix.g22 * g};
}

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::Thm1: return "thm1";
    case Theorem::Thm2: return "thm2";
    case Theorem::Thm3: return "thm3";
    case Theorem::NotApplicable: return "n/a";
  }
  return "?";
}

ValidityVerdict check_validity(const GameClass& game,
                               const ControllerSpec& spec) {
  ValidityVerdict v;
  std::ostringstream why;

  if (game.variant == GameVariant::Coordination &&
      spec.family == AdaptationFamily::Phi1 &&
      spec.matrix == ControlMatrix::g1()) {
    v.theorem = Theorem::Thm1;
    const double h_max = game.beta / (game.alpha + game.beta);
    if (!(spec.k > 0.0)) {
      why << "k=" << spec.k << " violates k>0";
    } else if (!(spec.h > 0.0 && spec.h < h_max)) {
      why << "h=" << spec.h << " outside (0, beta/(alpha+beta)=" << h_max
          << ")";
    } else {
      v.satisfied = true;
      why << "coordination + g1 + phi1 with h=" << spec.h << " < " << h_max;
    }
    v.detail = why.str();
    return v;
  }

  if (game.variant == GameVariant::DominantAction1 &&
      spec.family == AdaptationFamily::Phi2 &&
      spec.matrix == ControlMatrix::g2()) {
    v.theorem = Theorem::Thm2;
    if (!(spec.k > game.alpha)) {
      why << "k=" << spec.k << " violates k > alpha=" << game.alpha;
    } else {
      v.satisfied = true;
      why << "dominant action 1 + g2 + phi2 with k=" << spec.k
          << " > alpha=" << game.alpha;
    }
    v.detail = why.str();
    return v;
  }

  if (game.variant == GameVariant::AntiCoordination &&
      spec.family == AdaptationFamily::Phi2 &&
      spec.matrix == ControlMatrix::g2()) {
    v.theorem = Theorem::Thm3;
    if (!(spec.k > 0.0)) {
      why << "k=" << spec.k << " violates k>0";
    } else {
      v.satisfied = true;
      why << "anti-coordination + g2 + phi2, any k>0";
    }
    v.detail = why.str();
    return v;
  }

  v.theorem = Theorem::NotApplicable;
  v.satisfied = false;
  why << "no convergence guarantee covers " << to_string(game.variant)
      << " with family " << to_string(spec.family);
  v.detail = why.str();
  return v;
}

}  // namespace evogain
