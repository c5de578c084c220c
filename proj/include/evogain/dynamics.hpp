#ifndef EVOGAIN_DYNAMICS_HPP
#define EVOGAIN_DYNAMICS_HPP

#include <array>
#include <complex>
#include <vector>

#include "evogain/controller.hpp"
#include "evogain/game.hpp"

namespace evogain {

/// Point of the planar phase space: population share of action 1 and the
/// current control gain.  The admissible domain is
/// Omega = [0,1] x [0, inf), which the flow leaves invariant.
struct SystemState {
  double x = 0.0;
  double g = 0.0;
};

bool in_domain(const SystemState& s);

/// A game under adaptive-gain control.  The classification of the nominal
/// game is computed once at construction and cached.
struct ControlledSystem {
  PayoffMatrix nominal;
  ControllerSpec control;
  GameClass game;
};

/// Builds a controlled system, validating the controller parameters and
/// classifying the nominal game.
ControlledSystem make_system(const PayoffMatrix& nominal,
                             const ControllerSpec& control);

struct Derivative {
  double dx = 0.0;
  double dg = 0.0;
};

/// Right-hand side of the coupled planar system
///   dx = x(1-x)[(a+d-b-c)x + b-d + (G11-G21)gx + (G12-G22)g(1-x)]
///   dg = phi(x) g
/// Requires s in Omega.
Derivative vector_field(const ControlledSystem& sys, const SystemState& s);

/// Partial derivatives of the vector field, row-major:
///   [ d(dx)/dx  d(dx)/dg ]
///   [ d(dg)/dx  d(dg)/dg ]
struct Jacobian {
  double dxdx = 0.0, dxdg = 0.0;
  double dgdx = 0.0, dgdg = 0.0;
};

/// Analytic Jacobian of vector_field at s.  Throws where the field is not
/// differentiable (Phi2 with h < 1 at x = 0 with positive gain).
Jacobian jacobian(const ControlledSystem& sys, const SystemState& s);

/// Eigenvalues of a 2x2 real matrix (complex pair when the discriminant is
/// negative), ordered by real part.
std::array<std::complex<double>, 2> eigenvalues(const Jacobian& j);

enum class Stability {
  StableNode,     // both real parts negative
  Saddle,         // real parts of opposite sign
  Source,         // both real parts positive
  NonHyperbolic,  // some real part within tolerance of zero
};

const char* to_string(Stability s);

/// |Re(lambda)| below this counts as zero for stability purposes; keeps the
/// exactly-zero eigenvalue of the x=0 gain ray from being misclassified.
inline constexpr double kHyperbolicTol = 1e-9;

Stability classify_stability(const std::array<std::complex<double>, 2>& eig);

struct EquilibriumReport {
  SystemState point;
  std::array<std::complex<double>, 2> eigenvalues;
  Stability stability = Stability::NonHyperbolic;
};

/// Equilibria of the controlled planar system.
///
/// Isolated equilibria are enumerated analytically: the zero-gain slice
/// carries x=0, x=1 and the interior root of the nominal replicator field;
/// Phi1 controllers can additionally pin an interior point on the x=h line.
/// Phi2 controllers freeze the gain at x=0, so every (0,g) is an
/// equilibrium; that one-parameter family is reported as a ray, not as a
/// point.  For an inert gain (family None) the listed points extend
/// verbatim to rays over g.
struct Equilibria {
  std::vector<EquilibriumReport> points;
  bool x_zero_gain_ray = false;
  bool gain_inert = false;
};

Equilibria find_equilibria(const ControlledSystem& sys);

}  // namespace evogain

#endif  // EVOGAIN_DYNAMICS_HPP
