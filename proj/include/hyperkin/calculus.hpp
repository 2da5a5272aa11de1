#pragma once

// Time-dependent scalar and hyperbolic quantities built from a closed analytic
// basis, with exact value/first/second derivative evaluation.

#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperkin/hypernum.hpp"

namespace hyperkin {

enum class BasisKind { POLY, COSH, SINH, EXP };

inline constexpr char const* to_string(BasisKind k) {
  switch (k) {
    case BasisKind::POLY: return "poly";
    case BasisKind::COSH: return "cosh";
    case BasisKind::SINH: return "sinh";
    case BasisKind::EXP: return "exp";
  }
  return "?";
}

/// coeff * t^param (POLY, param a nonnegative integer) or
/// coeff * {cosh, sinh, exp}(param * t).
struct BasisTerm {
  BasisKind kind = BasisKind::POLY;
  double coeff = 0.0;
  double param = 0.0;

  friend bool operator==(BasisTerm const&, BasisTerm const&) = default;
};

/// Value and first two derivatives of a scalar function at one instant.
struct Jet2 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  Jet2& operator+=(Jet2 const& o) {
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    return *this;
  }
  friend bool operator==(Jet2 const&, Jet2 const&) = default;
};

inline bool is_valid(BasisTerm const& term) {
  if (!std::isfinite(term.coeff) || !std::isfinite(term.param)) return false;
  if (term.kind == BasisKind::POLY) {
    return term.param >= 0 && term.param == std::floor(term.param);
  }
  return true;
}

inline Jet2 eval_jet(BasisTerm const& term, double t) {
  double const c = term.coeff;
  double const w = term.param;
  switch (term.kind) {
    case BasisKind::POLY: {
      auto const k = static_cast<int>(term.param);
      if (k == 0) return {c, 0.0, 0.0};
      if (k == 1) return {c * t, c, 0.0};
      double const tk2 = std::pow(t, k - 2);
      return {c * tk2 * t * t, c * k * tk2 * t, c * k * (k - 1) * tk2};
    }
    case BasisKind::COSH: {
      double const ch = std::cosh(w * t), sh = std::sinh(w * t);
      return {c * ch, c * w * sh, c * w * w * ch};
    }
    case BasisKind::SINH: {
      double const ch = std::cosh(w * t), sh = std::sinh(w * t);
      return {c * sh, c * w * ch, c * w * w * sh};
    }
    case BasisKind::EXP: {
      double const e = std::exp(w * t);
      return {c * e, c * w * e, c * w * w * e};
    }
  }
  return {};
}

/// t -> sum of terms.
class ScalarPath {
 public:
  ScalarPath() = default;
  explicit ScalarPath(std::vector<BasisTerm> terms) : terms_(std::move(terms)) {
    for (auto const& term : terms_) {
      if (!is_valid(term)) {
        throw std::invalid_argument(
            std::string("invalid basis term of kind ") + to_string(term.kind));
      }
    }
  }

  static ScalarPath constant(double c) {
    return ScalarPath({{BasisKind::POLY, c, 0}});
  }
  static ScalarPath linear(double c0, double c1) {
    return ScalarPath({{BasisKind::POLY, c0, 0}, {BasisKind::POLY, c1, 1}});
  }

  std::vector<BasisTerm> const& terms() const { return terms_; }

  double operator()(double t) const { return eval(t).v; }

  Jet2 eval(double t) const {
    Jet2 sum;
    for (auto const& term : terms_) sum += eval_jet(term, t);
    return sum;
  }

  /// Concatenation of term lists; evaluates as the pointwise sum.
  friend ScalarPath operator+(ScalarPath a, ScalarPath const& b) {
    a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
    return a;
  }

  friend bool operator==(ScalarPath const&, ScalarPath const&) = default;

 private:
  std::vector<BasisTerm> terms_;
};

struct HypPath {
  ScalarPath xpath;
  ScalarPath ypath;

  HypNumber operator()(double t) const { return {xpath(t), ypath(t)}; }

  /// The x<->y swap, i.e. multiplication of every value by j.
  HypPath swapped() const { return {ypath, xpath}; }

  friend bool operator==(HypPath const&, HypPath const&) = default;
};

inline Jet2 eval_jet(ScalarPath const& path, double t) { return path.eval(t); }

struct HypJet {
  HypNumber v;
  HypNumber d1;
  HypNumber d2;
};

inline HypJet eval_hyp_jet(HypPath const& path, double t) {
  Jet2 const a = path.xpath.eval(t);
  Jet2 const b = path.ypath.eval(t);
  return {{a.v, b.v}, {a.d1, b.d1}, {a.d2, b.d2}};
}

/// Central-difference jet of any callable t -> double. Test oracle only.
template <typename F>
Jet2 fd_jet(F const& f, double t, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("fd_jet: eps must be positive");
  double const fp = f(t + eps), f0 = f(t), fm = f(t - eps);
  return {f0, (fp - fm) / (2 * eps), (fp - 2 * f0 + fm) / (eps * eps)};
}

inline Jet2 fd_jet(ScalarPath const& path, double t, double eps) {
  return fd_jet([&path](double s) { return path(s); }, t, eps);
}

/// Central first difference of a hyperbolic-valued function.
template <typename F>
HypNumber central_difference(F const& f, double t, double eps) {
  return (f(t + eps) - f(t - eps)) / (2 * eps);
}

/// Central second difference of a hyperbolic-valued function.
template <typename F>
HypNumber second_difference(F const& f, double t, double eps) {
  return (f(t + eps) - 2.0 * f(t) + f(t - eps)) / (eps * eps);
}

/// Step used wherever the library differentiates numerically.
inline double derivative_step(double t) { return 1e-6 * (1.0 + std::fabs(t)); }

}  // namespace hyperkin
