#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "specgini/endowment.hpp"
#include "specgini/geometry.hpp"
#include "specgini/mre.hpp"

namespace specgini {

struct SvgCurve {
  const MREPolyline* polyline = nullptr;
  std::string label;
};

struct SvgScatter {
  const EndowmentMatrix* data = nullptr;
  std::string label;
};

namespace detail {

inline const char* curve_color(std::size_t k) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  return palette[k % (sizeof(palette) / sizeof(palette[0]))];
}

inline const char* scatter_color(std::size_t k) {
  static const char* palette[] = {"#000000", "#3366cc", "#888888", "#aa3377"};
  return palette[k % (sizeof(palette) / sizeof(palette[0]))];
}

inline std::string fmt(double x, int prec = 6) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
  return buf;
}

// Readable tick label; large axes are rendered in thousands.
inline std::string tick_label(double value, bool thousands) {
  return fmt(thousands ? value / 1000.0 : value, 6);
}

}  // namespace detail

// Fixed 800x600 viewport, linear axes fitted to the drawn content plus a 5%
// margin. Polylines are drawn with their two rays clipped to the plot area.
// An axis spanning beyond 10^4 units is labeled in thousands.
inline std::string render_svg(const std::vector<SvgScatter>& scatters,
                              const std::vector<SvgCurve>& curves,
                              const std::string& x_label = "attribute 1",
                              const std::string& y_label = "attribute 2") {
  constexpr double W = 800, H = 600;
  constexpr double ml = 70, mr = 20, mt = 20, mb = 50;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  auto absorb = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& s : scatters)
    for (std::size_t i = 0; i < s.data->rows(); ++i) absorb((*s.data)(i, 0), (*s.data)(i, 1));
  for (const auto& c : curves)
    for (const auto& z : c.polyline->vertices) absorb(z[0], z[1]);
  if (!(xmax > xmin)) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  if (!(ymax > ymin)) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  const double padx = 0.05 * (xmax - xmin), pady = 0.05 * (ymax - ymin);
  const Window win{xmin - padx, xmax + padx, ymin - pady, ymax + pady};

  auto sx = [&](double x) { return ml + (x - win.xmin) / win.width() * (W - ml - mr); };
  auto sy = [&](double y) { return H - mb - (y - win.ymin) / win.height() * (H - mt - mb); };

  const bool kx = std::max(std::abs(win.xmin), std::abs(win.xmax)) >= 1e4;
  const bool ky = std::max(std::abs(win.ymin), std::abs(win.ymax)) >= 1e4;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

  // axes + ticks
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + detail::fmt(ml) + "\" y1=\"" + detail::fmt(H - mb) + "\" x2=\"" +
         detail::fmt(W - mr) + "\" y2=\"" + detail::fmt(H - mb) + "\"/>\n";
  svg += "<line x1=\"" + detail::fmt(ml) + "\" y1=\"" + detail::fmt(mt) + "\" x2=\"" +
         detail::fmt(ml) + "\" y2=\"" + detail::fmt(H - mb) + "\"/>\n";
  svg += "</g>\n";
  constexpr int kTicks = 5;
  for (int k = 0; k <= kTicks; ++k) {
    const double fx = win.xmin + win.width() * k / kTicks;
    const double fy = win.ymin + win.height() * k / kTicks;
    svg += "<line stroke=\"black\" x1=\"" + detail::fmt(sx(fx)) + "\" y1=\"" + detail::fmt(H - mb) +
           "\" x2=\"" + detail::fmt(sx(fx)) + "\" y2=\"" + detail::fmt(H - mb + 5) + "\"/>\n";
    svg += "<text font-size=\"12\" text-anchor=\"middle\" x=\"" + detail::fmt(sx(fx)) + "\" y=\"" +
           detail::fmt(H - mb + 18) + "\">" + detail::tick_label(fx, kx) + "</text>\n";
    svg += "<line stroke=\"black\" x1=\"" + detail::fmt(ml - 5) + "\" y1=\"" + detail::fmt(sy(fy)) +
           "\" x2=\"" + detail::fmt(ml) + "\" y2=\"" + detail::fmt(sy(fy)) + "\"/>\n";
    svg += "<text font-size=\"12\" text-anchor=\"end\" x=\"" + detail::fmt(ml - 8) + "\" y=\"" +
           detail::fmt(sy(fy) + 4) + "\">" + detail::tick_label(fy, ky) + "</text>\n";
  }
  svg += "<text font-size=\"13\" text-anchor=\"middle\" x=\"" + detail::fmt((ml + W - mr) / 2) +
         "\" y=\"" + detail::fmt(H - 10) + "\">" + x_label + (kx ? " (x1000)" : "") + "</text>\n";
  svg += "<text font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
         detail::fmt((mt + H - mb) / 2) + ")\" x=\"15\" y=\"" + detail::fmt((mt + H - mb) / 2) +
         "\">" + y_label + (ky ? " (x1000)" : "") + "</text>\n";

  for (std::size_t k = 0; k < scatters.size(); ++k) {
    const auto& s = scatters[k];
    svg += "<g fill=\"" + std::string(detail::scatter_color(k)) + "\">\n";
    for (std::size_t i = 0; i < s.data->rows(); ++i) {
      svg += "<circle r=\"3\" cx=\"" + detail::fmt(sx((*s.data)(i, 0))) + "\" cy=\"" +
             detail::fmt(sy((*s.data)(i, 1))) + "\"/>\n";
    }
    svg += "</g>\n";
  }

  double legend_y = mt + 14;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& c = curves[k];
    const auto chain = clip_polyline_to_window(*c.polyline, win);
    svg += "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" +
           std::string(detail::curve_color(k)) + "\" points=\"";
    for (const auto& z : chain)
      svg += detail::fmt(sx(z[0])) + "," + detail::fmt(sy(z[1])) + " ";
    svg += "\"/>\n";
    svg += "<text font-size=\"12\" fill=\"" + std::string(detail::curve_color(k)) + "\" x=\"" +
           detail::fmt(ml + 10) + "\" y=\"" + detail::fmt(legend_y) + "\">" + c.label + "</text>\n";
    legend_y += 16;
  }
  for (std::size_t k = 0; k < scatters.size(); ++k) {
    svg += "<text font-size=\"12\" fill=\"" + std::string(detail::scatter_color(k)) + "\" x=\"" +
           detail::fmt(ml + 10) + "\" y=\"" + detail::fmt(legend_y) + "\">" + scatters[k].label +
           "</text>\n";
    legend_y += 16;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace specgini
