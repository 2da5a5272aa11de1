#pragma once

// Curvature of the pole curves, conjugate points (trajectory curvature
// centers) and the hyperbolic Euler-Savary relation.
//
// Canonical coordinates: origin at the fixed pole p', and a point z of H' has
// canonical coordinate (z - p') / T, where T is the unit tangent of the fixed
// pole curve. The pole tangent is therefore the real axis and the pole normal
// is the j axis, whichever branch T lies on.

#include <cmath>
#include <functional>
#include <limits>

#include "hyperkin/calculus.hpp"
#include "hyperkin/errors.hpp"
#include "hyperkin/hypernum.hpp"
#include "hyperkin/kinematics.hpp"

namespace hyperkin {

struct CanonicalInvariants {
  double t = 0.0;
  double h = 1.0;
  double sigma_rate = 0.0;         // ||p'_fixed||_h, arc rate of (P')
  double sigma_rate_moving = 0.0;  // ||p'_moving||_h, arc rate of (P)
  double tau_rate = 0.0;           // turning rate of the (P) tangent
  double taup_rate = 0.0;          // turning rate of the (P') tangent
  double r = 0.0;                  // curvature radius of (P)
  double rp = 0.0;                 // curvature radius of (P')
  double dnu_ds = 0.0;             // 1/rp - 1/r
  HypNumber pole_fixed;            // canonical origin in H'
  HypNumber tangent_fixed;         // unit tangent of (P') in H'

  /// Rotation rate of H relative to H' about the pole, per unit t.
  double dnu_rate() const { return taup_rate - tau_rate; }
};

namespace detail {

// Hyperbolic angle of a tangent vector, refusing lightlike directions.
inline double tangent_angle(HypNumber const& v, Branch expected, double t) {
  Branch const b = classify(v);
  if (b == Branch::LIGHTLIKE || b != expected) {
    throw LightlikeError("pole tangent crosses an isotropic direction", t);
  }
  return polar(v).phi;
}

// Central difference of the tangent angle. Requires the tangent to stay on
// one branch over [t - step, t + step].
template <typename Tangent>
double turning_rate(Tangent const& tangent, double t) {
  double const step = derivative_step(t);
  HypNumber const v0 = tangent(t);
  Branch const b = classify(v0);
  if (b == Branch::LIGHTLIKE) {
    throw LightlikeError("lightlike pole tangent " + to_string(v0), t);
  }
  double const up = tangent_angle(tangent(t + step), b, t);
  double const down = tangent_angle(tangent(t - step), b, t);
  return (up - down) / (2 * step);
}

}  // namespace detail

inline CanonicalInvariants canonical_invariants(HomotheticMotion const& motion,
                                                double t) {
  PoleSample const s = pole_sample(motion, t);
  if (s.stationary) {
    throw DegeneratePoleCurve("moving pole curve is stationary", t);
  }
  if (is_lightlike(s.pd_moving) || is_lightlike(s.pd_fixed)) {
    throw LightlikeError("pole tangent is lightlike", t);
  }

  auto moving = [&motion](double s) {
    return pole_velocity(state(motion, s));
  };
  auto fixed = [&motion](double s) {
    return fixed_pole_velocity(state(motion, s));
  };

  CanonicalInvariants inv;
  inv.t = t;
  inv.h = s.h;
  inv.sigma_rate = modulus_h(s.pd_fixed);
  inv.sigma_rate_moving = modulus_h(s.pd_moving);
  inv.tau_rate = detail::turning_rate(moving, t);
  inv.taup_rate = detail::turning_rate(fixed, t);
  // A straight pole curve has zero turning rate and infinite radius.
  inv.r = inv.sigma_rate_moving / inv.tau_rate;
  inv.rp = inv.sigma_rate / inv.taup_rate;
  inv.dnu_ds = inv.taup_rate / inv.sigma_rate -
               inv.tau_rate / inv.sigma_rate_moving;
  inv.pole_fixed = s.p_fixed;
  inv.tangent_fixed = s.pd_fixed / inv.sigma_rate;
  return inv;
}

inline HypNumber to_canonical(CanonicalInvariants const& inv,
                              HypNumber const& z_fixed) {
  return (z_fixed - inv.pole_fixed) / inv.tangent_fixed;
}

inline HypNumber from_canonical(CanonicalInvariants const& inv,
                                HypNumber const& c) {
  return inv.pole_fixed + inv.tangent_fixed * c;
}

struct ConjugateInput {
  HypNumber x;        // pole ray PX in canonical coordinates
  double h = 1.0;
  double sigma = 1.0;  // arc rate per unit t
  double dnu = 0.0;    // (tau' - tau) per unit t
};

/// Solves sigma (x - x') + j h x x' dnu = 0 for x'.
inline HypNumber conjugate_point(ConjugateInput const& in) {
  if (in.sigma == 0.0) throw std::invalid_argument("conjugate_point: sigma = 0");
  HypNumber const den =
      HypNumber{in.sigma} - in.h * in.dnu * (HypNumber::j() * in.x);
  if (is_lightlike(den)) {
    throw LightlikeError(
        "conjugate point at infinity: denominator " + to_string(den) +
        " is lightlike");
  }
  return in.sigma * in.x / den;
}

/// (1/a - 1/ap) e^{-j alpha} - h (1/rp - 1/r). Zero when (a, alpha) and ap
/// satisfy the Euler-Savary relation.
inline HypNumber euler_savary_residual(double a, double ap, double alpha,
                                       double h, double r, double rp) {
  return (1.0 / a - 1.0 / ap) * exp_j(-alpha) -
         HypNumber{h * (1.0 / rp - 1.0 / r)};
}

inline ConjugateInput conjugate_input(CanonicalInvariants const& inv,
                                      HypNumber const& x_canonical) {
  return {x_canonical, inv.h, inv.sigma_rate, inv.dnu_rate()};
}

/// Curvature center in H' of the trajectory of the point x fixed on H,
/// predicted through the canonical frame and conjugate_point.
inline HypNumber predicted_curvature_center(HomotheticMotion const& motion,
                                            HypNumber const& x, double t) {
  CanonicalInvariants const inv = canonical_invariants(motion, t);
  HypNumber const x_fixed = map_point(state(motion, t), x);
  try {
    HypNumber const c =
        conjugate_point(conjugate_input(inv, to_canonical(inv, x_fixed)));
    return from_canonical(inv, c);
  } catch (DegeneracyError& e) {
    e.attach_t(t);
    throw;
  }
}

/// Intersection of the Lorentzian normals of a curve at t - eps and t + eps.
/// The normal at s passes through curve(s) with direction j * velocity(s).
inline HypNumber normals_intersection(
    std::function<HypNumber(double)> const& curve,
    std::function<HypNumber(double)> const& velocity, double t, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  HypNumber const j = HypNumber::j();
  HypNumber const a = curve(t - eps), b = curve(t + eps);
  HypNumber const va = velocity(t - eps), vb = velocity(t + eps);
  if (is_lightlike(va) || is_lightlike(vb)) {
    throw LightlikeError("trajectory velocity is lightlike; normal undefined",
                         t);
  }
  HypNumber const na = j * va, nb = j * vb;
  // a + lambda na = b + mu nb
  double const det = -na.x * nb.y + na.y * nb.x;
  double const scale = std::hypot(na.x, na.y) * std::hypot(nb.x, nb.y);
  if (det == 0.0 || scale / std::fabs(det) > 1e8) {
    throw ParallelNormals("trajectory normals are (nearly) parallel", t);
  }
  HypNumber const rhs = b - a;
  double const lambda = (-rhs.x * nb.y + rhs.y * nb.x) / det;
  return a + lambda * na;
}

/// Independent curvature-center estimate for the trajectory of x fixed on H.
inline HypNumber curvature_center_oracle(HomotheticMotion const& motion,
                                         HypNumber const& x, double t,
                                         double eps) {
  auto curve = [&](double s) { return map_point(state(motion, s), x); };
  auto velocity = [&](double s) {
    return velocity_decompose(state(motion, s), x, {}).va;
  };
  return normals_intersection(curve, velocity, t, eps);
}

}  // namespace hyperkin
