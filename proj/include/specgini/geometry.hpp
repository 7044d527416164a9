#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "specgini/mre.hpp"

namespace specgini {

// Axis-aligned clipping window. The representative-endowment boundary is
// unbounded, so distances between boundaries are taken after clipping to a
// common finite window.
struct Window {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double diagonal() const { return std::hypot(width(), height()); }
};

namespace detail {

using Point2 = std::array<double, 2>;

// Liang-Barsky segment/box clip; returns false if the segment misses the box.
inline bool clip_segment(const Window& w, Point2 a, Point2 b, Point2& out_a, Point2& out_b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  double t0 = 0.0, t1 = 1.0;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {a[0] - w.xmin, w.xmax - a[0], a[1] - w.ymin, w.ymax - a[1]};
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      if (q[k] < 0.0) return false;
    } else {
      const double r = q[k] / p[k];
      if (p[k] < 0.0) {
        if (r > t1) return false;
        t0 = std::max(t0, r);
      } else {
        if (r < t0) return false;
        t1 = std::min(t1, r);
      }
    }
  }
  out_a = {a[0] + t0 * dx, a[1] + t0 * dy};
  out_b = {a[0] + t1 * dx, a[1] + t1 * dy};
  return true;
}

inline double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const double abx = b[0] - a[0], aby = b[1] - a[1];
  const double len2 = abx * abx + aby * aby;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p[0] - a[0]) * abx + (p[1] - a[1]) * aby) / len2, 0.0, 1.0);
  return std::hypot(p[0] - (a[0] + t * abx), p[1] - (a[1] + t * aby));
}

}  // namespace detail

// Clips the polyline together with its two unbounded rays to the window,
// returning the connected boundary chain inside it. The boundary is
// monotone in both coordinates, so it meets the box in a single connected
// piece; a window that misses the boundary entirely is an error.
inline std::vector<std::array<double, 2>> clip_polyline_to_window(const MREPolyline& m,
                                                                  const Window& w) {
  using detail::Point2;
  if (m.vertices.empty()) throw std::invalid_argument("cannot clip an empty polyline");
  if (!(w.xmax > w.xmin) || !(w.ymax > w.ymin))
    throw std::invalid_argument("clip window must have positive extent");

  std::vector<Point2> chain;
  chain.reserve(m.vertices.size() + 2);
  const Point2& first = m.vertices.front();
  const Point2& last = m.vertices.back();
  // Extend both rays strictly past the window so clipping sees plain segments.
  chain.push_back({first[0], std::max(w.ymax, first[1]) + w.height() + 1.0});
  chain.insert(chain.end(), m.vertices.begin(), m.vertices.end());
  chain.push_back({std::max(w.xmax, last[0]) + w.width() + 1.0, last[1]});

  std::vector<Point2> out;
  const double weld = 1e-12 * (1.0 + w.diagonal());
  for (std::size_t k = 1; k < chain.size(); ++k) {
    Point2 a, b;
    if (!detail::clip_segment(w, chain[k - 1], chain[k], a, b)) continue;
    if (out.empty()) {
      out.push_back(a);
    } else if (std::abs(out.back()[0] - a[0]) > weld || std::abs(out.back()[1] - a[1]) > weld) {
      // A second disconnected piece cannot occur for a monotone boundary.
      throw std::logic_error("clipped boundary unexpectedly disconnected");
    }
    if (std::abs(out.back()[0] - b[0]) > weld || std::abs(out.back()[1] - b[1]) > weld)
      out.push_back(b);
  }
  if (out.empty())
    throw std::invalid_argument("window excludes the polyline entirely");
  return out;
}

namespace detail {

inline std::vector<Point2> densify_chain(const std::vector<Point2>& chain, double max_step) {
  std::vector<Point2> pts;
  pts.push_back(chain.front());
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const Point2& a = chain[k - 1];
    const Point2& b = chain[k];
    const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
    const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / max_step)));
    for (std::size_t s = 1; s <= pieces; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(pieces);
      pts.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
    }
  }
  return pts;
}

inline double directed_hausdorff(const std::vector<Point2>& from_pts,
                                 const std::vector<Point2>& to_chain) {
  double worst = 0.0;
  for (const Point2& p : from_pts) {
    double best = std::numeric_limits<double>::infinity();
    if (to_chain.size() == 1) best = std::hypot(p[0] - to_chain[0][0], p[1] - to_chain[0][1]);
    for (std::size_t k = 1; k < to_chain.size(); ++k)
      best = std::min(best, point_segment_distance(p, to_chain[k - 1], to_chain[k]));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace detail

// Symmetric Hausdorff distance between two window-clipped boundary chains,
// computed from point-to-segment distances on densified chains.
inline double hausdorff_polyline(const MREPolyline& a, const MREPolyline& b, const Window& w,
                                 std::size_t densify = 1024) {
  const auto ca = clip_polyline_to_window(a, w);
  const auto cb = clip_polyline_to_window(b, w);
  const double step = w.diagonal() / static_cast<double>(std::max<std::size_t>(densify, 8));
  const auto pa = detail::densify_chain(ca, step);
  const auto pb = detail::densify_chain(cb, step);
  return std::max(detail::directed_hausdorff(pa, cb), detail::directed_hausdorff(pb, ca));
}

}  // namespace specgini
