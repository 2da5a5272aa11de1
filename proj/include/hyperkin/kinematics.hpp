#pragma once

// One-parameter homothetic motion of a moving hyperbolic plane H with respect
// to a fixed plane H':
//
//   x' = (h x - u) e^{j phi}
//
// with h(t) the homothetic scale, phi(t) the hyperbolic rotation angle and
// u(t) the origin of H' expressed in H.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperkin/calculus.hpp"
#include "hyperkin/errors.hpp"
#include "hyperkin/hypernum.hpp"

namespace hyperkin {

inline constexpr double kMinAngularVelocity = 1e-12;

struct HomotheticMotion {
  ScalarPath h;
  ScalarPath phi;
  HypPath u;
  double t0 = -1.0;
  double t1 = 1.0;

  /// Throws ValidationError unless phi' stays away from zero on a uniform
  /// grid of `samples` points over [t0, t1].
  void validate(std::size_t samples = 101) const {
    if (!(t0 < t1)) throw ValidationError("interval must satisfy t0 < t1");
    for (std::size_t i = 0; i < samples; ++i) {
      double const t = t0 + (t1 - t0) * static_cast<double>(i) /
                                static_cast<double>(samples - 1);
      if (std::fabs(phi.eval(t).d1) < kMinAngularVelocity) {
        throw ValidationError("angular velocity vanishes at t=" +
                              std::to_string(t));
      }
    }
  }

  /// False when h' vanishes on the whole sample grid, i.e. the motion is an
  /// ordinary (non-homothetic) hyperbolic motion.
  bool is_homothetic(std::size_t samples = 101) const {
    for (std::size_t i = 0; i < samples; ++i) {
      double const t = t0 + (t1 - t0) * static_cast<double>(i) /
                                static_cast<double>(samples - 1);
      if (h.eval(t).d1 != 0.0) return true;
    }
    return false;
  }

  /// Conjugation of the whole motion by j (x <-> y swap of u). Positions in
  /// both planes get multiplied by j, which exchanges H-I and H-II.
  HomotheticMotion swapped() const { return {h, phi, u.swapped(), t0, t1}; }
};

/// Every jet of h, phi and u at one instant.
struct MotionState {
  double t = 0.0;
  double h = 1.0, hd = 0.0, hdd = 0.0;
  double phi = 0.0, phid = 1.0, phidd = 0.0;
  HypNumber u, ud, udd;
  HypNumber rot{1.0, 0.0};  // e^{j phi}
};

inline MotionState state(HomotheticMotion const& motion, double t) {
  Jet2 const h = motion.h.eval(t);
  Jet2 const phi = motion.phi.eval(t);
  if (std::fabs(phi.d1) < kMinAngularVelocity) {
    throw DegenerateError("angular velocity phi' vanishes", t);
  }
  HypJet const u = eval_hyp_jet(motion.u, t);
  return {t, h.v, h.d1, h.d2, phi.v, phi.d1, phi.d2,
          u.v, u.d1, u.d2, exp_j(phi.v)};
}

/// Image in H' of the point x of H.
inline HypNumber map_point(MotionState const& st, HypNumber const& x) {
  return (st.h * x - st.u) * st.rot;
}

/// h' + j h phi', the factor multiplying (x - p) in the sliding velocity.
inline HypNumber scale_rotation_rate(MotionState const& st) {
  return {st.hd, st.h * st.phid};
}

/// u' + j phi' u.
inline HypNumber origin_rate(MotionState const& st) {
  return st.ud + st.phid * (HypNumber::j() * st.u);
}

/// h'' + h phi'^2 + j(2 h' phi' + h phi''), the factor multiplying (x - p)
/// in the sliding acceleration.
inline HypNumber scale_rotation_accel(MotionState const& st) {
  return {st.hdd + st.h * st.phid * st.phid,
          2 * st.hd * st.phid + st.h * st.phidd};
}

struct VelocityDecomposition {
  HypNumber vr;  // relative
  HypNumber vf;  // sliding
  HypNumber va;  // absolute
};

/// Velocities of a point moving on H along x(t) with derivative xd.
/// `va` is obtained by differentiating the trajectory directly, so
/// va = vf + vr is a genuine identity check, not a definition.
inline VelocityDecomposition velocity_decompose(MotionState const& st,
                                                HypNumber const& x,
                                                HypNumber const& xd) {
  HypNumber const e = st.rot;
  HypNumber const vr = st.h * xd * e;
  HypNumber const vf = scale_rotation_rate(st) * x * e - origin_rate(st) * e;

  HypNumber const w = st.h * x - st.u;
  HypNumber const wd = st.hd * x + st.h * xd - st.ud;
  HypNumber const va = (wd + st.phid * (HypNumber::j() * w)) * e;
  return {vr, vf, va};
}

/// Rotation pole: the point of H whose sliding velocity vanishes,
/// p = (u' + j phi' u) / (h' + j h phi').
inline HypNumber pole_point(MotionState const& st) {
  try {
    return origin_rate(st) / scale_rotation_rate(st);
  } catch (LightlikeError const&) {
    throw LightlikeError("pole denominator h' + j h phi' is lightlike", st.t);
  }
}

/// Sliding velocity written about the pole, (h' + j h phi')(x - p) e^{j phi}.
inline HypNumber sliding_velocity_about_pole(MotionState const& st,
                                             HypNumber const& x) {
  return scale_rotation_rate(st) * (x - pole_point(st)) * st.rot;
}

/// Time derivative of the moving pole curve. Only order-2 jets are needed:
/// with p = N / D, p' = (N' - p D') / D.
inline HypNumber pole_velocity(MotionState const& st) {
  HypNumber const j = HypNumber::j();
  HypNumber const p = pole_point(st);
  HypNumber const num_d = st.udd + j * (st.phidd * st.u + st.phid * st.ud);
  HypNumber const den_d{st.hdd, st.hd * st.phid + st.h * st.phidd};
  return (num_d - p * den_d) / scale_rotation_rate(st);
}

/// Point of the fixed pole curve (P') at this instant.
inline HypNumber fixed_pole_point(MotionState const& st) {
  return map_point(st, pole_point(st));
}

/// Derivative of p' = (h p - u) e^{j phi} by the product rule, without
/// using the pole condition.
inline HypNumber fixed_pole_velocity(MotionState const& st) {
  HypNumber const p = pole_point(st);
  return (scale_rotation_rate(st) * p - origin_rate(st) +
          st.h * pole_velocity(st)) *
         st.rot;
}

struct PoleSample {
  double t = 0.0;
  double h = 1.0;
  HypNumber p_moving;
  HypNumber p_fixed;
  HypNumber pd_moving;
  HypNumber pd_fixed;
  bool stationary = false;  // pd_moving == 0: the pole does not move

  /// ||p'_fixed||_h / (|h| ||p'_moving||_h); equals 1 for every sample.
  double arc_ratio() const {
    double const dm = std::fabs(h) * modulus_h(pd_moving);
    if (stationary || dm == 0.0) {
      throw DegeneratePoleCurve("arc-rate ratio undefined: moving pole curve "
                                "has zero or lightlike tangent",
                                t);
    }
    return modulus_h(pd_fixed) / dm;
  }
};

inline bool is_stationary(HypNumber const& pd, HypNumber const& p) {
  return max_abs(pd) <= 1e-12 * (1.0 + max_abs(p));
}

inline PoleSample pole_sample(HomotheticMotion const& motion, double t) {
  try {
    MotionState const st = state(motion, t);
    PoleSample s;
    s.t = t;
    s.h = st.h;
    s.p_moving = pole_point(st);
    s.p_fixed = map_point(st, s.p_moving);
    s.pd_moving = pole_velocity(st);
    s.pd_fixed = fixed_pole_velocity(st);
    s.stationary = is_stationary(s.pd_moving, s.p_moving);
    return s;
  } catch (DegeneracyError& e) {
    e.attach_t(t);
    throw;
  }
}

/// n uniform samples of the moving and fixed pole curves over [t0, t1].
/// Samples are independent of each other.
inline std::vector<PoleSample> pole_curves(HomotheticMotion const& motion,
                                           double t0, double t1,
                                           std::size_t n) {
  if (n < 2) throw std::invalid_argument("pole_curves: n must be >= 2");
  std::vector<PoleSample> samples;
  samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double const t =
        i + 1 == n ? t1
                   : t0 + (t1 - t0) * static_cast<double>(i) /
                              static_cast<double>(n - 1);
    samples.push_back(pole_sample(motion, t));
  }
  return samples;
}

struct AccelerationDecomposition {
  HypNumber br;  // relative
  HypNumber bc;  // Coriolis
  HypNumber bf;  // sliding
  HypNumber ba;  // absolute
};

/// Accelerations of a point moving on H along x(t). `ba` is the second
/// derivative of the trajectory computed by the product rule, so
/// ba = bf + bc + br checks the pole and its derivative.
inline AccelerationDecomposition acceleration_decompose(MotionState const& st,
                                                        HypNumber const& x,
                                                        HypNumber const& xd,
                                                        HypNumber const& xdd) {
  HypNumber const j = HypNumber::j();
  HypNumber const e = st.rot;
  HypNumber const rate = scale_rotation_rate(st);
  HypNumber const p = pole_point(st);
  HypNumber const pd = pole_velocity(st);

  HypNumber const br = st.h * xdd * e;
  HypNumber const bc = 2.0 * xd * rate * e;
  HypNumber const bf = (x - p) * scale_rotation_accel(st) * e - pd * rate * e;

  HypNumber const w = st.h * x - st.u;
  HypNumber const wd = st.hd * x + st.h * xd - st.ud;
  HypNumber const wdd =
      st.hdd * x + 2.0 * st.hd * xd + st.h * xdd - st.udd;
  HypNumber const rot_dd{st.phid * st.phid, st.phidd};  // e''/e
  HypNumber const ba =
      (wdd + 2.0 * st.phid * (j * wd) + rot_dd * w) * e;
  return {br, bc, bf, ba};
}

/// Acceleration pole: the point of H whose sliding acceleration vanishes.
inline HypNumber acceleration_pole(MotionState const& st) {
  HypNumber const p = pole_point(st);
  HypNumber const pd = pole_velocity(st);
  HypNumber const k = scale_rotation_accel(st);
  if (is_lightlike(k)) {
    throw LightlikeError("acceleration pole denominator h'' + h phi'^2 + "
                         "j(2h' phi' + h phi'') is lightlike: " +
                             to_string(k),
                         st.t);
  }
  return p + pd * scale_rotation_rate(st) / k;
}

/// Reduced formulas for h == 1, kept separate from the general ones so the
/// two can be compared.
namespace unit_scale {

/// p = u + j u' / phi'.
inline HypNumber pole_point(MotionState const& st) {
  return st.u + (HypNumber::j() * st.ud) / st.phid;
}

/// q = p + p' (phi' phi'' - j phi'^3) / (phi''^2 - phi'^4).
inline HypNumber acceleration_pole(MotionState const& st,
                                   HypNumber const& p,
                                   HypNumber const& pd) {
  double const w = st.phid, a = st.phidd;
  double const den = a * a - w * w * w * w;
  if (den == 0.0) {
    throw LightlikeError("phi''^2 = phi'^4: no acceleration pole", st.t);
  }
  return p + pd * HypNumber{w * a, -w * w * w} / den;
}

}  // namespace unit_scale

}  // namespace hyperkin
