#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests drive it with in-memory streams.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperkin/hyperkin.hpp"

namespace hyperkin::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDegenerate = 3 };

struct RunReport {
  std::string command;
  std::string input_digest;  // FNV-1a 64 of the config text, hex
  Table table;
  std::string svg;  // set by `plot` instead of a table
  std::vector<std::string> warnings;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fnv1a_hex(std::string const& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

inline HypNumber parse_point(std::string const& text) {
  auto const comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--point expects X,Y but got '" + text + "'");
  }
  try {
    std::size_t used_x = 0, used_y = 0;
    std::string const xs = text.substr(0, comma), ys = text.substr(comma + 1);
    double const x = std::stod(xs, &used_x);
    double const y = std::stod(ys, &used_y);
    if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("");
    return {x, y};
  } catch (std::logic_error const&) {
    throw UsageError("--point expects X,Y but got '" + text + "'");
  }
}

struct Options {
  std::string command;
  std::string config_path;
  std::optional<double> t, t0, t1;
  std::optional<int> n;
  std::string out;
  std::string point = "0,0";
  std::optional<double> a;
  double alpha = 0.0;
  double eps = 1e-4;
};

inline std::vector<double> time_grid(Options const& o, MotionConfig const& cfg,
                                     bool default_to_interval) {
  if (o.t) {
    if (o.t0 || o.t1 || o.n) {
      throw UsageError("--t cannot be combined with --t0/--t1/--n");
    }
    return {*o.t};
  }
  double t0 = cfg.t0, t1 = cfg.t1;
  int n = 201;
  if (o.t0 || o.t1 || o.n) {
    if (!(o.t0 && o.t1 && o.n)) {
      throw UsageError("--t0, --t1 and --n must be given together");
    }
    t0 = *o.t0;
    t1 = *o.t1;
    n = *o.n;
  } else if (!default_to_interval) {
    throw UsageError("give either --t or --t0/--t1/--n");
  }
  if (n < 2) throw UsageError("--n must be at least 2");
  std::vector<double> grid;
  for (int i = 0; i < n; ++i) {
    grid.push_back(i + 1 == n ? t1 : t0 + (t1 - t0) * i / (n - 1));
  }
  return grid;
}

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline double signed_distance(PolarForm const& p) {
  return (p.branch == Branch::HIII || p.branch == Branch::HIV) ? -p.r : p.r;
}

}  // namespace detail

/// Evaluates one parsed command. Throws UsageError, ConfigError,
/// ValidationError or a DegeneracyError.
inline RunReport execute(detail::Options const& o) {
  RunReport report;
  report.command = o.command;
  std::string const text = detail::read_file(o.config_path);
  report.input_digest = detail::fnv1a_hex(text);
  MotionConfig const cfg = parse_config(text);
  HomotheticMotion const motion = cfg.motion();
  if (!motion.is_homothetic()) report.warnings.push_back("homothetic: false");

  HypNumber const x = detail::parse_point(o.point);
  auto& cols = report.table.columns;
  auto& rows = report.table.rows;
  auto with_t = [](double t, auto&& body) {
    try {
      return body();
    } catch (DegeneracyError& e) {
      e.attach_t(t);
      throw;
    }
  };

  if (o.command == "eval") {
    cols = {"t", "h", "hd", "hdd", "phi", "phid", "phidd", "ux", "uy",
            "udx", "udy", "uddx", "uddy", "mx", "my"};
    for (double t : detail::time_grid(o, cfg, false)) {
      with_t(t, [&] {
        MotionState const st = state(motion, t);
        HypNumber const m = map_point(st, x);
        rows.push_back({t, st.h, st.hd, st.hdd, st.phi, st.phid, st.phidd,
                        st.u.x, st.u.y, st.ud.x, st.ud.y, st.udd.x, st.udd.y,
                        m.x, m.y});
      });
    }
  } else if (o.command == "decompose") {
    cols = {"t", "vrx", "vry", "vfx", "vfy", "vax", "vay"};
    for (double t : detail::time_grid(o, cfg, false)) {
      with_t(t, [&] {
        auto const v = velocity_decompose(state(motion, t), x, {});
        rows.push_back({t, v.vr.x, v.vr.y, v.vf.x, v.vf.y, v.va.x, v.va.y});
      });
    }
  } else if (o.command == "pole") {
    cols = {"t", "px", "py"};
    for (double t : detail::time_grid(o, cfg, false)) {
      with_t(t, [&] {
        HypNumber const p = pole_point(state(motion, t));
        rows.push_back({t, p.x, p.y});
      });
    }
  } else if (o.command == "polecurves") {
    cols = {"t", "pmx", "pmy", "pfx", "pfy", "arc_ratio"};
    for (double t : detail::time_grid(o, cfg, false)) {
      PoleSample const s = pole_sample(motion, t);
      if (is_lightlike(s.pd_moving) && !s.stationary) {
        throw LightlikeError("moving pole tangent is lightlike", t);
      }
      rows.push_back({t, s.p_moving.x, s.p_moving.y, s.p_fixed.x, s.p_fixed.y,
                      s.arc_ratio()});
    }
  } else if (o.command == "accel") {
    cols = {"t", "brx", "bry", "bcx", "bcy", "bfx", "bfy", "bax", "bay"};
    for (double t : detail::time_grid(o, cfg, false)) {
      with_t(t, [&] {
        auto const b = acceleration_decompose(state(motion, t), x, {}, {});
        rows.push_back({t, b.br.x, b.br.y, b.bc.x, b.bc.y, b.bf.x, b.bf.y,
                        b.ba.x, b.ba.y});
      });
    }
  } else if (o.command == "accelpole") {
    cols = {"t", "qx", "qy"};
    for (double t : detail::time_grid(o, cfg, false)) {
      with_t(t, [&] {
        HypNumber const q = acceleration_pole(state(motion, t));
        rows.push_back({t, q.x, q.y});
      });
    }
  } else if (o.command == "invariants") {
    cols = {"t", "sigma_rate", "sigma_rate_moving", "tau_rate", "taup_rate",
            "r", "rp", "dnu_ds"};
    for (double t : detail::time_grid(o, cfg, false)) {
      auto const inv = canonical_invariants(motion, t);
      rows.push_back({t, inv.sigma_rate, inv.sigma_rate_moving, inv.tau_rate,
                      inv.taup_rate, inv.r, inv.rp, inv.dnu_ds});
    }
  } else if (o.command == "eulersavary") {
    if (!o.a) throw UsageError("eulersavary requires --a");
    cols = {"t", "r", "rp", "dnu_ds", "ap", "alphap", "cx", "cy"};
    HypNumber const x_can = *o.a * (HypNumber::j() * exp_j(o.alpha));
    for (double t : detail::time_grid(o, cfg, false)) {
      auto const inv = canonical_invariants(motion, t);
      with_t(t, [&] {
        HypNumber const xp = conjugate_point(conjugate_input(inv, x_can));
        PolarForm const pf = polar(xp);
        HypNumber const c = from_canonical(inv, xp);
        rows.push_back({t, inv.r, inv.rp, inv.dnu_ds,
                        detail::signed_distance(pf), pf.phi, c.x, c.y});
      });
    }
  } else if (o.command == "oracle") {
    cols = {"t", "ox", "oy", "cx", "cy", "distance"};
    for (double t : detail::time_grid(o, cfg, false)) {
      HypNumber const oc = curvature_center_oracle(motion, x, t, o.eps);
      HypNumber const pc = predicted_curvature_center(motion, x, t);
      rows.push_back({t, oc.x, oc.y, pc.x, pc.y,
                      std::hypot(oc.x - pc.x, oc.y - pc.y)});
    }
  } else if (o.command == "plot") {
    auto const grid = detail::time_grid(o, cfg, true);
    LabeledSequence moving{"moving pole curve (P)", {}};
    LabeledSequence fixed{"fixed pole curve (P')", {}};
    LabeledSequence trajectory{"trajectory of " + o.point, {}};
    for (double t : grid) {
      with_t(t, [&] {
        MotionState const st = state(motion, t);
        HypNumber const p = pole_point(st);
        moving.points.push_back(p);
        fixed.points.push_back(map_point(st, p));
        trajectory.points.push_back(map_point(st, x));
      });
    }
    SvgOptions opt;
    opt.title = "pole curves";
    report.svg = render_svg({moving, fixed, trajectory}, opt);
  } else {
    throw UsageError("unknown command '" + o.command + "'");
  }
  return report;
}

inline void emit(RunReport const& report, std::ostream& out) {
  if (!report.svg.empty()) {
    out << report.svg;
  } else {
    write_csv(out, report.table);
  }
}

/// Full program: argument parsing, dispatch, output and the exit-code
/// contract (0 ok, 2 usage/config, 3 mathematical degeneracy).
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"hyperkin: homothetic motions of the hyperbolic plane"};
  app.require_subcommand(1);
  detail::Options o;

  struct Spec {
    char const* name;
    char const* help;
  };
  static constexpr Spec kCommands[] = {
      {"eval", "jets of h, phi, u and the image of --point; columns "
               "t,h,hd,hdd,phi,phid,phidd,ux,uy,udx,udy,uddx,uddy,mx,my"},
      {"decompose", "velocities of --point fixed on H; columns "
                    "t,vrx,vry,vfx,vfy,vax,vay"},
      {"pole", "rotation pole in H; columns t,px,py"},
      {"polecurves", "moving/fixed pole curves; columns "
                     "t,pmx,pmy,pfx,pfy,arc_ratio"},
      {"accel", "accelerations of --point fixed on H; columns "
                "t,brx,bry,bcx,bcy,bfx,bfy,bax,bay"},
      {"accelpole", "acceleration pole in H; columns t,qx,qy"},
      {"invariants", "pole-curve invariants; columns "
                     "t,sigma_rate,sigma_rate_moving,tau_rate,taup_rate,r,rp,"
                     "dnu_ds"},
      {"eulersavary", "conjugate point of canonical x = a j e^{j alpha}; "
                      "columns t,r,rp,dnu_ds,ap,alphap,cx,cy"},
      {"oracle", "normal-intersection curvature center of --point vs the "
                 "prediction; columns t,ox,oy,cx,cy,distance"},
      {"plot", "SVG of the pole curves and the trajectory of --point"},
  };
  for (auto const& spec : kCommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--config", o.config_path, "motion config (JSON)")
        ->required();
    sub->add_option("--t", o.t, "single time");
    sub->add_option("--t0", o.t0, "grid start");
    sub->add_option("--t1", o.t1, "grid end");
    sub->add_option("--n", o.n, "grid size");
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--point", o.point, "point X,Y of the moving plane");
    sub->add_option("--a", o.a, "pole distance (eulersavary)");
    sub->add_option("--alpha", o.alpha, "hyperbolic angle (eulersavary)");
    sub->add_option("--eps", o.eps, "oracle step")->capture_default_str();
    sub->callback([&o, sub] { o.command = sub->get_name(); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    RunReport const report = execute(o);
    for (auto const& w : report.warnings) err << "warning: " << w << '\n';
    if (o.out.empty()) {
      emit(report, out);
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + o.out + "'");
      emit(report, file);
    }
    return kOk;
  } catch (DegeneracyError const& e) {
    err << "degeneracy kind=" << e.kind();
    if (e.t()) err << " t=" << format_number(*e.t());
    err << " reason=\"" << e.what() << "\"\n";
    return kDegenerate;
  } catch (ConfigError const& e) {
    err << "config error field=" << e.field() << " reason=\"" << e.what()
        << "\"\n";
    return kUsage;
  } catch (ValidationError const& e) {
    err << "validation error reason=\"" << e.what() << "\"\n";
    return kUsage;
  } catch (UsageError const& e) {
    err << "usage error reason=\"" << e.what() << "\"\n";
    return kUsage;
  }
}

}  // namespace hyperkin::cli
