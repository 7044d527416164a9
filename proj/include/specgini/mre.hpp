#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "specgini/directions.hpp"
#include "specgini/distortion.hpp"
#include "specgini/endowment.hpp"

namespace specgini {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kHalfPi = kPi / 2.0;

// Angles in [0, pi/2] at which the ascending order of the projected rows
// p_theta' x_i can change: 0, pi/2, and every interior angle orthogonal to a
// difference of two distinct rows. Between consecutive returned angles the
// ranking of the projections is constant.
inline std::vector<double> critical_angles_2d(const EndowmentMatrix& X) {
  if (X.cols() != 2) throw std::domain_error("critical angles are defined for two attributes only");
  std::vector<double> angles{0.0, kHalfPi};
  const double scale = std::max(1.0, X.max_abs());
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (std::size_t j = i + 1; j < X.rows(); ++j) {
      const double dx = X(i, 0) - X(j, 0);
      const double dy = X(i, 1) - X(j, 1);
      if (std::abs(dx) <= 1e-15 * scale && std::abs(dy) <= 1e-15 * scale) continue;  // equal rows
      // (cos t, sin t) . (dx, dy) = 0 has a solution in (0, pi/2) only when
      // the components have opposite signs.
      if (dx * dy < 0.0) {
        const double theta = std::atan2(std::abs(dx), std::abs(dy));
        if (theta > 0.0 && theta < kHalfPi) angles.push_back(theta);
      }
    }
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> unique;
  unique.reserve(angles.size());
  for (double a : angles)
    if (unique.empty() || a - unique.back() > 1e-12) unique.push_back(a);
  if (unique.back() < kHalfPi) unique.push_back(kHalfPi);  // guard the dedup edge
  return unique;
}

namespace detail {

// Supporting point of the representative-endowment region for the ranking
// induced by direction theta: z = sum_i w_i x_(sigma(i)) with sigma the
// ascending order of the projections (ties broken by row index). For every
// p in the same ranking cone, p'z equals the priced spectral value, so z is
// an exact boundary point.
inline std::array<double, 2> supporting_point_2d(const EndowmentMatrix& X,
                                                 const std::vector<double>& weights, double theta,
                                                 std::vector<std::size_t>& order,
                                                 std::vector<double>& proj) {
  const std::size_t n = X.rows();
  const double c = std::cos(theta), s = std::sin(theta);
  proj.resize(n);
  for (std::size_t i = 0; i < n; ++i) proj[i] = c * X(i, 0) + s * X(i, 1);
  order.resize(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });
  double zx = 0.0, zy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    zx += weights[k] * X(order[k], 0);
    zy += weights[k] * X(order[k], 1);
  }
  return {zx, zy};
}

}  // namespace detail

// The exact two-attribute multi-dimensioned representative endowment: the
// lower (Pareto-minimal) border of the convex upper set
//   C+ = { z : p'z >= S_v(p'X) for every p in the nonnegative unit circle }.
// Stored as the ordered convex vertex chain; a vertical ray extends upward
// from the first vertex and a horizontal ray rightward from the last.
struct MREPolyline {
  std::vector<std::array<double, 2>> vertices;
  DistortionSpec distortion = DistortionSpec::identity();

  // Minimum of p'z over the polyline plus its rays. For any direction in
  // the nonnegative quadrant the rays only increase p'z, so the minimum is
  // attained at a vertex; it reproduces the priced spectral value.
  double support_min(const Direction& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : vertices) best = std::min(best, p[0] * z[0] + p[1] * z[1]);
    return best;
  }

  const std::array<double, 2>& leftmost() const { return vertices.front(); }
  const std::array<double, 2>& rightmost() const { return vertices.back(); }
};

namespace detail {

inline MREPolyline build_polyline(const EndowmentMatrix& X, const DistortionSpec& v,
                                  const std::vector<double>& arc_midpoints) {
  const std::vector<double> weights = empirical_weights(v, X.rows()).weights;
  std::vector<std::size_t> order;
  std::vector<double> proj;

  const double scale = std::max(1.0, X.max_abs());
  const double merge_tol = 1e-12 * scale;
  const double turn_tol = 1e-10;

  MREPolyline m;
  m.distortion = v;
  auto& pts = m.vertices;
  for (double theta : arc_midpoints) {
    const auto z = supporting_point_2d(X, weights, theta, order, proj);
    if (!pts.empty() && std::abs(z[0] - pts.back()[0]) <= merge_tol &&
        std::abs(z[1] - pts.back()[1]) <= merge_tol)
      continue;
    // Keep only convex left turns; collinear or numerically inverted middle
    // points are dropped, hull style.
    while (pts.size() >= 2) {
      const auto& a = pts[pts.size() - 2];
      const auto& b = pts.back();
      const double e1x = b[0] - a[0], e1y = b[1] - a[1];
      const double e2x = z[0] - b[0], e2y = z[1] - b[1];
      const double cross = e1x * e2y - e1y * e2x;
      const double len = std::sqrt((e1x * e1x + e1y * e1y) * (e2x * e2x + e2y * e2y));
      if (cross <= turn_tol * len)
        pts.pop_back();
      else
        break;
    }
    pts.push_back(z);
  }

  // Vertex-chain invariants: x increasing, y decreasing along the sweep.
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (!(pts[k][0] > pts[k - 1][0] - merge_tol) || !(pts[k][1] < pts[k - 1][1] + merge_tol))
      throw std::logic_error("representative endowment chain lost monotonicity");
  }
  return m;
}

}  // namespace detail

// Exact construction: one candidate supporting point per ranking cone,
// evaluated at the cone's angular midpoint so that ties occur only between
// genuinely equal projections.
inline MREPolyline mre_2d(const EndowmentMatrix& X, const DistortionSpec& v) {
  if (X.cols() != 2)
    throw std::domain_error("exact representative endowments are built for two attributes only");
  if (!v.concave())
    throw std::domain_error("representative endowment regions require a concave distortion");
  const std::vector<double> angles = critical_angles_2d(X);
  std::vector<double> mids;
  mids.reserve(angles.size() - 1);
  for (std::size_t k = 1; k < angles.size(); ++k) mids.push_back(0.5 * (angles[k - 1] + angles[k]));
  return detail::build_polyline(X, v, mids);
}

// Approximate construction on a uniform angle grid. Every emitted vertex is
// still an exact boundary point; only vertices whose ranking cone falls
// between grid angles can be skipped. Intended for large samples where the
// exact cone enumeration (quadratic in n) is too expensive.
inline MREPolyline mre_2d_sampled(const EndowmentMatrix& X, const DistortionSpec& v,
                                  std::size_t num_angles) {
  if (X.cols() != 2)
    throw std::domain_error("representative endowments are built for two attributes only");
  if (!v.concave())
    throw std::domain_error("representative endowment regions require a concave distortion");
  if (num_angles < 2) throw std::invalid_argument("angle grid needs at least two directions");
  std::vector<double> mids;
  mids.reserve(num_angles);
  for (std::size_t k = 0; k < num_angles; ++k)
    mids.push_back((static_cast<double>(k) + 0.5) / static_cast<double>(num_angles) * kHalfPi);
  return detail::build_polyline(X, v, mids);
}

// Membership in the convex upper set C+. In two dimensions the test uses
// the polyline's edge normals plus the axis directions, which are exactly
// the facet-defining constraints of the polyhedral region. For d >= 3 a
// quasi-uniform direction sample is used and the answer is approximate.
inline bool contains(const EndowmentMatrix& X, const DistortionSpec& v,
                     const std::vector<double>& z, double tolerance = -1.0,
                     std::size_t directions = 2000) {
  if (z.size() != X.cols())
    throw std::domain_error("point dimension does not match the attribute count");
  if (tolerance < 0.0) {
    double zmax = 0.0;
    for (double c : z) zmax = std::max(zmax, std::abs(c));
    tolerance = 1e-9 * (1.0 + std::max(X.max_abs(), zmax));
  }
  if (X.cols() == 2) {
    const MREPolyline m = mre_2d(X, v);
    if (z[0] < m.leftmost()[0] - tolerance) return false;
    if (z[1] < m.rightmost()[1] - tolerance) return false;
    for (std::size_t k = 1; k < m.vertices.size(); ++k) {
      const auto& a = m.vertices[k - 1];
      const auto& b = m.vertices[k];
      double nx = -(b[1] - a[1]), ny = b[0] - a[0];  // inward normal, both components >= 0
      const double norm = std::sqrt(nx * nx + ny * ny);
      nx /= norm;
      ny /= norm;
      if (nx * z[0] + ny * z[1] < nx * a[0] + ny * a[1] - tolerance) return false;
    }
    return true;
  }
  for (const Direction& p : direction_grid(X.cols(), directions)) {
    double pz = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) pz += p[j] * z[j];
    if (pz < priced_spectral(X, p, v) - tolerance) return false;
  }
  return true;
}

}  // namespace specgini
