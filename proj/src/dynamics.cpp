#include "evogain/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evogain {

namespace {

// Gain-free part of the replicator bracket and the coefficient the gain
// multiplies; dx = x(1-x) * (base(x) + ctrl(x) * g).
double bracket_base(const PayoffMatrix& m, double x) {
  return (m.a + m.d - m.b - m.c) * x + (m.b - m.d);
}

double bracket_ctrl(const ControlMatrix& G, double x) {
  return (G.g11 - G.g21) * x + (G.g12 - G.g22) * (1.0 - x);
}

void require_in_domain(const SystemState& s, const char* who) {
  if (!in_domain(s)) {
    throw std::invalid_argument(std::string(who) +
                                ": state outside [0,1] x [0,inf)");
  }
}

}  // namespace

bool in_domain(const SystemState& s) {
  return s.x >= 0.0 && s.x <= 1.0 && s.g >= 0.0 && std::isfinite(s.x) &&
         std::isfinite(s.g);
}

ControlledSystem make_system(const PayoffMatrix& nominal,
                             const ControllerSpec& control) {
  validate(control);
  return {nominal, control, classify(nominal)};
}

Derivative vector_field(const ControlledSystem& sys, const SystemState& s) {
  require_in_domain(s, "vector_field");
  const double bracket = bracket_base(sys.nominal, s.x) +
                         bracket_ctrl(sys.control.matrix, s.x) * s.g;
  return {s.x * (1.0 - s.x) * bracket, phi(sys.control, s.x) * s.g};
}

Jacobian jacobian(const ControlledSystem& sys, const SystemState& s) {
  require_in_domain(s, "jacobian");
  const PayoffMatrix& m = sys.nominal;
  const ControlMatrix& G = sys.control.matrix;
  const double bracket = bracket_base(m, s.x) + bracket_ctrl(G, s.x) * s.g;
  const double dbracket_dx =
      (m.a + m.d - m.b - m.c) + ((G.g11 - G.g21) - (G.g12 - G.g22)) * s.g;

  Jacobian j;
  j.dxdx = (1.0 - 2.0 * s.x) * bracket + s.x * (1.0 - s.x) * dbracket_dx;
  j.dxdg = s.x * (1.0 - s.x) * bracket_ctrl(G, s.x);
  // At g = 0 the gain row vanishes identically in g, so its x-derivative is
  // zero even where phi itself has an unbounded slope.
  j.dgdx = s.g == 0.0 ? 0.0 : phi_prime(sys.control, s.x) * s.g;
  j.dgdg = phi(sys.control, s.x);
  return j;
}

std::array<std::complex<double>, 2> eigenvalues(const Jacobian& j) {
  const double tr = j.dxdx + j.dgdg;
  const double det = j.dxdx * j.dgdg - j.dxdg * j.dgdx;
  const double disc = tr * tr - 4.0 * det;
  std::array<std::complex<double>, 2> eig;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    eig = {std::complex<double>((tr - root) / 2.0, 0.0),
           std::complex<double>((tr + root) / 2.0, 0.0)};
  } else {
    const double root = std::sqrt(-disc);
    eig = {std::complex<double>(tr / 2.0, -root / 2.0),
           std::complex<double>(tr / 2.0, root / 2.0)};
  }
  if (eig[0].real() > eig[1].real()) std::swap(eig[0], eig[1]);
  return eig;
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::StableNode: return "stable";
    case Stability::Saddle: return "saddle";
    case Stability::Source: return "source";
    case Stability::NonHyperbolic: return "non-hyperbolic";
  }
  return "?";
}

Stability classify_stability(const std::array<std::complex<double>, 2>& eig) {
  const double r0 = eig[0].real();
  const double r1 = eig[1].real();
  if (std::abs(r0) < kHyperbolicTol || std::abs(r1) < kHyperbolicTol) {
    return Stability::NonHyperbolic;
  }
  if (r0 < 0.0 && r1 < 0.0) return Stability::StableNode;
  if (r0 > 0.0 && r1 > 0.0) return Stability::Source;
  return Stability::Saddle;
}

namespace {

EquilibriumReport report_at(const ControlledSystem& sys,
                            const SystemState& s) {
  EquilibriumReport r;
  r.point = s;
  r.eigenvalues = eigenvalues(jacobian(sys, s));
  r.stability = classify_stability(r.eigenvalues);
  return r;
}

}  // namespace

Equilibria find_equilibria(const ControlledSystem& sys) {
  Equilibria out;
  out.gain_inert = sys.control.family == AdaptationFamily::None;
  out.x_zero_gain_ray = sys.control.family == AdaptationFamily::Phi2;

  // Zero-gain slice: the corners plus the interior root of the nominal
  // replicator bracket, when it falls strictly inside (0,1).
  std::vector<SystemState> pts = {{0.0, 0.0}, {1.0, 0.0}};
  const double slope = sys.nominal.a + sys.nominal.d - sys.nominal.b -
                       sys.nominal.c;
  if (slope != 0.0) {
    const double xr = (sys.nominal.d - sys.nominal.b) / slope;
    if (xr > 0.0 && xr < 1.0) pts.push_back({xr, 0.0});
  }

  // Phi1 freezes the gain on the x=h line; the bracket is affine in g
  // there, so a positive-gain interior equilibrium exists iff the solved
  // gain is positive.
  if (sys.control.family == AdaptationFamily::Phi1 && sys.control.h > 0.0 &&
      sys.control.h < 1.0) {
    const double hc = sys.control.h;
    const double coeff = bracket_ctrl(sys.control.matrix, hc);
    if (coeff != 0.0) {
      const double gr = -bracket_base(sys.nominal, hc) / coeff;
      if (gr > 0.0 && std::isfinite(gr)) pts.push_back({hc, gr});
    }
  }

  out.points.reserve(pts.size());
  for (const SystemState& s : pts) out.points.push_back(report_at(sys, s));
  return out;
}

}  // namespace evogain
