#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hyperkin {

/// Base of every mathematical degeneracy (lightlike division, vanishing
/// angular velocity, stationary pole curve, parallel normals). The CLI maps
/// these to exit code 3.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(std::string kind, std::string const& what,
                  std::optional<double> t = std::nullopt)
      : std::runtime_error(what), kind_(std::move(kind)), t_(t) {}

  std::string const& kind() const noexcept { return kind_; }
  std::optional<double> t() const noexcept { return t_; }

  void attach_t(double t) {
    if (!t_) t_ = t;
  }

 private:
  std::string kind_;
  std::optional<double> t_;
};

// Division by an isotropic (zero-divisor) hyperbolic number.
class LightlikeError : public DegeneracyError {
 public:
  explicit LightlikeError(std::string const& what,
                          std::optional<double> t = std::nullopt)
      : DegeneracyError("LightlikeError", what, t) {}
};

// Angular velocity of the motion vanishes.
class DegenerateError : public DegeneracyError {
 public:
  explicit DegenerateError(std::string const& what,
                           std::optional<double> t = std::nullopt)
      : DegeneracyError("DegenerateError", what, t) {}
};

// Pole curve has zero tangent at the requested instant.
class DegeneratePoleCurve : public DegeneracyError {
 public:
  explicit DegeneratePoleCurve(std::string const& what,
                               std::optional<double> t = std::nullopt)
      : DegeneracyError("DegeneratePoleCurve", what, t) {}
};

class ParallelNormals : public DegeneracyError {
 public:
  explicit ParallelNormals(std::string const& what,
                           std::optional<double> t = std::nullopt)
      : DegeneracyError("ParallelNormals", what, t) {}
};

/// Malformed motion config. `field` is the JSON path of the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, std::string const& what)
      : std::runtime_error(what), field_(std::move(field)) {}
  std::string const& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Config parsed but the motion it describes is invalid on its interval.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperkin
