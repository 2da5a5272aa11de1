#pragma once

// Minimal deterministic SVG plots of curves in the Lorentzian plane.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperkin/hypernum.hpp"

namespace hyperkin {

struct LabeledSequence {
  std::string label;
  std::vector<HypNumber> points;
};

struct SvgOptions {
  int width = 640;
  int height = 640;
  int margin = 40;
  std::string title;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

inline std::string escape_xml(std::string const& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline constexpr char const* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                           "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace detail

inline std::string render_svg(std::vector<LabeledSequence> const& sequences,
                              SvgOptions const& opt = {}) {
  if (sequences.empty()) throw std::invalid_argument("render_svg: no sequences");
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;  // always show the origin
  for (auto const& seq : sequences) {
    if (seq.points.size() < 2) {
      throw std::invalid_argument("render_svg: sequence '" + seq.label +
                                  "' needs at least two points");
    }
    for (auto const& p : seq.points) {
      if (!is_finite(p)) throw std::invalid_argument("render_svg: non-finite point");
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  // Square, padded data window so the isotropic lines sit at 45 degrees.
  double const cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);
  double half = 0.5 * std::max(hi_x - lo_x, hi_y - lo_y) * 1.05;
  if (half == 0.0) half = 1.0;
  double const x0 = cx - half, x1 = cx + half, y0 = cy - half, y1 = cy + half;

  double const plot_w = opt.width - 2.0 * opt.margin;
  double const plot_h = opt.height - 2.0 * opt.margin;
  double const side = std::min(plot_w, plot_h);
  auto sx = [&](double x) { return opt.margin + (x - x0) / (x1 - x0) * side; };
  auto sy = [&](double y) { return opt.margin + (y1 - y) / (y1 - y0) * side; };

  using detail::fmt;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(opt.width) + "\" height=\"" +
         std::to_string(opt.height) + "\" viewBox=\"0 0 " +
         std::to_string(opt.width) + " " + std::to_string(opt.height) +
         "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(opt.width) +
         "\" height=\"" + std::to_string(opt.height) + "\" fill=\"white\"/>\n";
  if (!opt.title.empty()) {
    out += "<text x=\"" + fmt(opt.width / 2.0) +
           "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
           detail::escape_xml(opt.title) + "</text>\n";
  }

  // Axes through the origin.
  out += "<g class=\"axes\" stroke=\"#444\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + fmt(sx(x0)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" +
         fmt(sx(x1)) + "\" y2=\"" + fmt(sy(0)) + "\"/>\n";
  out += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(y0)) + "\" x2=\"" +
         fmt(sx(0)) + "\" y2=\"" + fmt(sy(y1)) + "\"/>\n";
  out += "</g>\n";

  // Isotropic lines y = x and y = -x, clipped to the window.
  out += "<g class=\"isotropic\" stroke=\"#999\" stroke-width=\"1\" "
         "stroke-dasharray=\"6,4\">\n";
  for (double sign : {1.0, -1.0}) {
    double const a = std::max(x0, sign > 0 ? y0 : -y1);
    double const b = std::min(x1, sign > 0 ? y1 : -y0);
    out += "<line x1=\"" + fmt(sx(a)) + "\" y1=\"" + fmt(sy(sign * a)) +
           "\" x2=\"" + fmt(sx(b)) + "\" y2=\"" + fmt(sy(sign * b)) + "\"/>\n";
  }
  out += "</g>\n";

  std::size_t k = 0;
  for (auto const& seq : sequences) {
    char const* color = detail::kPalette[k % std::size(detail::kPalette)];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < seq.points.size(); ++i) {
      if (i) out += ' ';
      out += fmt(sx(seq.points[i].x)) + "," + fmt(sy(seq.points[i].y));
    }
    out += "\"/>\n";
    ++k;
  }

  out += "<g class=\"legend\" font-size=\"12\">\n";
  k = 0;
  for (auto const& seq : sequences) {
    char const* color = detail::kPalette[k % std::size(detail::kPalette)];
    double const y = opt.margin + 14.0 * static_cast<double>(k);
    out += "<rect x=\"" + fmt(opt.width - opt.margin - 120.0) + "\" y=\"" +
           fmt(y - 9) + "\" width=\"10\" height=\"10\" fill=\"" + color +
           "\"/>\n";
    out += "<text x=\"" + fmt(opt.width - opt.margin - 105.0) + "\" y=\"" +
           fmt(y) + "\">" + detail::escape_xml(seq.label) + "</text>\n";
    ++k;
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace hyperkin
