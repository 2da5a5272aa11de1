#pragma once

// JSON motion definitions:
//
//   {"h":   [{"kind": "poly", "coeff": 1, "param": 0}],
//    "phi": [{"kind": "poly", "coeff": 1, "param": 1}],
//    "u_x": [...], "u_y": [...],
//    "interval": [-1, 1]}

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "hyperkin/calculus.hpp"
#include "hyperkin/errors.hpp"
#include "hyperkin/kinematics.hpp"

namespace hyperkin {

struct MotionConfig {
  std::vector<BasisTerm> h;
  std::vector<BasisTerm> phi;
  std::vector<BasisTerm> u_x;
  std::vector<BasisTerm> u_y;
  double t0 = 0.0;
  double t1 = 0.0;

  HomotheticMotion motion() const {
    return {ScalarPath(h), ScalarPath(phi), {ScalarPath(u_x), ScalarPath(u_y)},
            t0, t1};
  }

  friend bool operator==(MotionConfig const&, MotionConfig const&) = default;
};

namespace detail {

using nlohmann::json;

inline double number_at(json const& j, std::string const& path) {
  if (!j.is_number()) throw ConfigError(path, path + ": expected a number");
  return j.get<double>();
}

inline BasisTerm parse_term(json const& j, std::string const& path) {
  if (!j.is_object()) throw ConfigError(path, path + ": expected an object");
  for (auto const& [key, _] : j.items()) {
    if (key != "kind" && key != "coeff" && key != "param") {
      throw ConfigError(path + "." + key, path + ": unknown key '" + key + "'");
    }
  }
  for (char const* key : {"kind", "coeff", "param"}) {
    if (!j.contains(key)) {
      throw ConfigError(path + "." + key,
                        path + ": missing required key '" + key + "'");
    }
  }
  BasisTerm term;
  auto const& kind = j.at("kind");
  std::string const kind_path = path + ".kind";
  if (!kind.is_string()) throw ConfigError(kind_path, kind_path + ": expected a string");
  std::string const k = kind.get<std::string>();
  if (k == "poly") {
    term.kind = BasisKind::POLY;
  } else if (k == "cosh") {
    term.kind = BasisKind::COSH;
  } else if (k == "sinh") {
    term.kind = BasisKind::SINH;
  } else if (k == "exp") {
    term.kind = BasisKind::EXP;
  } else {
    throw ConfigError(kind_path, kind_path + ": unknown kind '" + k + "'");
  }
  term.coeff = number_at(j.at("coeff"), path + ".coeff");
  term.param = number_at(j.at("param"), path + ".param");
  if (!is_valid(term)) {
    throw ConfigError(path + ".param",
                      path + ": poly power must be a nonnegative integer");
  }
  return term;
}

inline std::vector<BasisTerm> parse_terms(json const& root,
                                          std::string const& field) {
  if (!root.contains(field)) {
    throw ConfigError(field, "missing required field '" + field + "'");
  }
  json const& arr = root.at(field);
  if (!arr.is_array()) throw ConfigError(field, field + ": expected an array");
  std::vector<BasisTerm> terms;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    terms.push_back(
        parse_term(arr[i], field + "[" + std::to_string(i) + "]"));
  }
  return terms;
}

inline json term_json(BasisTerm const& term) {
  return {{"kind", to_string(term.kind)},
          {"coeff", term.coeff},
          {"param", term.param}};
}

}  // namespace detail

/// Parses and schema-checks a motion config. Does not check the motion
/// itself; see validate_config.
inline MotionConfig parse_config_unchecked(std::string_view text) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("<document>", "config must be a JSON object");
  }
  for (auto const& [key, _] : root.items()) {
    if (key != "h" && key != "phi" && key != "u_x" && key != "u_y" &&
        key != "interval") {
      throw ConfigError(key, "unknown key '" + key + "'");
    }
  }
  MotionConfig cfg;
  cfg.h = detail::parse_terms(root, "h");
  cfg.phi = detail::parse_terms(root, "phi");
  cfg.u_x = detail::parse_terms(root, "u_x");
  cfg.u_y = detail::parse_terms(root, "u_y");
  if (!root.contains("interval")) {
    throw ConfigError("interval", "missing required field 'interval'");
  }
  json const& iv = root.at("interval");
  if (!iv.is_array() || iv.size() != 2) {
    throw ConfigError("interval", "interval: expected [t0, t1]");
  }
  cfg.t0 = detail::number_at(iv[0], "interval[0]");
  cfg.t1 = detail::number_at(iv[1], "interval[1]");
  if (!(cfg.t0 < cfg.t1)) {
    throw ConfigError("interval", "interval: expected t0 < t1");
  }
  return cfg;
}

inline void validate_config(MotionConfig const& cfg) {
  cfg.motion().validate(101);
}

/// parse_config_unchecked followed by validate_config.
inline MotionConfig parse_config(std::string_view text) {
  MotionConfig cfg = parse_config_unchecked(text);
  validate_config(cfg);
  return cfg;
}

inline std::string serialize(MotionConfig const& cfg) {
  using nlohmann::json;
  auto terms = [](std::vector<BasisTerm> const& ts) {
    json arr = json::array();
    for (auto const& t : ts) arr.push_back(detail::term_json(t));
    return arr;
  };
  json root = {{"h", terms(cfg.h)},
               {"phi", terms(cfg.phi)},
               {"u_x", terms(cfg.u_x)},
               {"u_y", terms(cfg.u_y)},
               {"interval", {cfg.t0, cfg.t1}}};
  return root.dump();
}

}  // namespace hyperkin
