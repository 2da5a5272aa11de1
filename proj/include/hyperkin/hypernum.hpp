#pragma once

// Hyperbolic (split-complex) numbers x + jy with j^2 = +1, the coordinates of
// the Lorentzian plane.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "hyperkin/errors.hpp"

namespace hyperkin {

struct HypNumber {
  double x = 0.0;  // real part
  double y = 0.0;  // unipotent part

  constexpr HypNumber() = default;
  constexpr HypNumber(double x_, double y_ = 0.0) : x(x_), y(y_) {}

  static constexpr HypNumber j() { return {0.0, 1.0}; }

  constexpr HypNumber& operator+=(HypNumber const& w) {
    x += w.x;
    y += w.y;
    return *this;
  }
  constexpr HypNumber& operator-=(HypNumber const& w) {
    x -= w.x;
    y -= w.y;
    return *this;
  }
  constexpr HypNumber& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr bool operator==(HypNumber const&,
                                   HypNumber const&) = default;
};

inline constexpr HypNumber operator-(HypNumber const& z) { return {-z.x, -z.y}; }
inline constexpr HypNumber operator+(HypNumber z, HypNumber const& w) {
  return z += w;
}
inline constexpr HypNumber operator-(HypNumber z, HypNumber const& w) {
  return z -= w;
}
inline constexpr HypNumber operator*(HypNumber z, double s) { return z *= s; }
inline constexpr HypNumber operator*(double s, HypNumber z) { return z *= s; }

inline constexpr HypNumber mul(HypNumber const& z, HypNumber const& w) {
  return {z.x * w.x + z.y * w.y, z.x * w.y + z.y * w.x};
}
inline constexpr HypNumber operator*(HypNumber const& z, HypNumber const& w) {
  return mul(z, w);
}

inline constexpr HypNumber conj(HypNumber const& z) { return {z.x, -z.y}; }

/// Lorentzian inner product <z, w> = Re(z conj(w)) = xu - yv.
inline constexpr double inner(HypNumber const& z, HypNumber const& w) {
  return z.x * w.x - z.y * w.y;
}

/// z conj(z) = x^2 - y^2, evaluated as (x+y)(x-y) so that it keeps full
/// relative precision near the isotropic lines.
inline constexpr double quadratic(HypNumber const& z) {
  return (z.x + z.y) * (z.x - z.y);
}

inline double modulus_h(HypNumber const& z) {
  return std::sqrt(std::fabs(quadratic(z)));
}

inline constexpr bool is_lightlike(HypNumber const& z) {
  return std::fabs(z.x) == std::fabs(z.y);
}

inline std::string to_string(HypNumber const& z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%c%.17gj", z.x,
                std::signbit(z.y) ? '-' : '+', std::fabs(z.y));
  return buf;
}

inline std::ostream& operator<<(std::ostream& os, HypNumber const& z) {
  return os << to_string(z);
}

inline HypNumber div(HypNumber const& z, HypNumber const& w) {
  double const d = quadratic(w);
  if (is_lightlike(w) || d == 0.0) {
    throw LightlikeError("division by lightlike number " + to_string(w));
  }
  HypNumber const n = mul(z, conj(w));
  return {n.x / d, n.y / d};
}
inline HypNumber operator/(HypNumber const& z, HypNumber const& w) {
  return div(z, w);
}
inline constexpr HypNumber operator/(HypNumber const& z, double s) {
  return {z.x / s, z.y / s};
}

/// Unit hyperbolic rotation cosh(phi) + j sinh(phi).
inline HypNumber exp_j(double phi) { return {std::cosh(phi), std::sinh(phi)}; }

enum class Branch { HI, HII, HIII, HIV, LIGHTLIKE };

inline constexpr char const* to_string(Branch b) {
  switch (b) {
    case Branch::HI: return "HI";
    case Branch::HII: return "HII";
    case Branch::HIII: return "HIII";
    case Branch::HIV: return "HIV";
    case Branch::LIGHTLIKE: return "LIGHTLIKE";
  }
  return "?";
}

/// Sector of the plane cut by the isotropic lines. Exact comparison, no
/// tolerance band.
inline constexpr Branch classify(HypNumber const& z) {
  double const ax = z.x < 0 ? -z.x : z.x;
  double const ay = z.y < 0 ? -z.y : z.y;
  if (ax == ay) return Branch::LIGHTLIKE;
  if (ax > ay) return z.x > 0 ? Branch::HI : Branch::HIII;
  return z.y > 0 ? Branch::HII : Branch::HIV;
}

/// z = +-r e^{j phi} on HI/HIII, z = +-r j e^{j phi} on HII/HIV. The sign
/// lives in the branch; r is always positive.
struct PolarForm {
  double r = 0.0;
  double phi = 0.0;
  Branch branch = Branch::HI;
};

inline PolarForm polar(HypNumber const& z) {
  Branch const b = classify(z);
  if (b == Branch::LIGHTLIKE) {
    throw LightlikeError("no polar form for lightlike number " + to_string(z));
  }
  // phi = atanh(y/x) = log((x+y)/(x-y)) / 2 on HI/HIII, with x and y swapped
  // on HII/HIV. Both ratios are positive inside their sector.
  double const s = z.x + z.y;
  double const d = z.x - z.y;
  double const ratio = (b == Branch::HI || b == Branch::HIII) ? s / d : -s / d;
  return {std::sqrt(std::fabs(s * d)), 0.5 * std::log(ratio), b};
}

inline HypNumber reconstruct(PolarForm const& p) {
  HypNumber const e = p.r * exp_j(p.phi);
  switch (p.branch) {
    case Branch::HI: return e;
    case Branch::HIII: return -e;
    case Branch::HII: return mul(HypNumber::j(), e);
    case Branch::HIV: return -mul(HypNumber::j(), e);
    case Branch::LIGHTLIKE: break;
  }
  throw LightlikeError("cannot reconstruct a lightlike polar form");
}

/// Hyperbolic angle of z (the `phi` of its polar form).
inline double hyperbolic_angle(HypNumber const& z) { return polar(z).phi; }

inline constexpr double max_abs(HypNumber const& z) {
  double const ax = z.x < 0 ? -z.x : z.x;
  double const ay = z.y < 0 ? -z.y : z.y;
  return ax > ay ? ax : ay;
}

inline bool is_finite(HypNumber const& z) {
  return std::isfinite(z.x) && std::isfinite(z.y);
}

}  // namespace hyperkin
