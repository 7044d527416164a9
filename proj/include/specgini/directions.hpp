#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "specgini/endowment.hpp"

namespace specgini {
namespace detail {

// Van der Corput radical inverse in the given base.
inline double radical_inverse(std::size_t index, unsigned base) {
  double value = 0.0;
  double scale = 1.0 / base;
  while (index > 0) {
    value += static_cast<double>(index % base) * scale;
    index /= base;
    scale /= base;
  }
  return value;
}

// Acklam's rational approximation of the standard normal quantile,
// accurate to ~1e-9 which is ample for direction generation.
inline double inverse_normal_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1 - plow;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (p > phigh) {
    q = std::sqrt(-2 * std::log(1 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

}  // namespace detail

// Deterministic quasi-uniform directions on the nonnegative part of the unit
// sphere. The axis directions are always included; in the plane the rest are
// uniformly spaced angle midpoints, and for d >= 3 a Halton sequence mapped
// through half-normal coordinates gives a low-discrepancy cover of the
// orthant. The result is reproducible and order-independent.
inline std::vector<Direction> direction_grid(std::size_t d, std::size_t count) {
  if (d == 0) throw std::invalid_argument("direction grid needs a positive dimension");
  std::vector<Direction> dirs;
  dirs.reserve(count + d);
  for (std::size_t j = 0; j < d; ++j) dirs.push_back(Direction::axis(j, d));
  if (d == 1) return dirs;
  if (d == 2) {
    const std::size_t interior = count > 2 ? count - 2 : 0;
    const double pi_half = std::acos(0.0);
    for (std::size_t k = 0; k < interior; ++k) {
      const double theta = (static_cast<double>(k) + 0.5) / static_cast<double>(interior) * pi_half;
      dirs.push_back(Direction::from_angle(theta));
    }
    return dirs;
  }
  static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (d > sizeof(primes) / sizeof(primes[0]))
    throw std::invalid_argument("direction grid supports at most 12 attributes");
  const std::size_t interior = count > d ? count - d : 0;
  std::vector<double> z(d);
  for (std::size_t k = 1; k <= interior; ++k) {
    double norm2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double u = detail::radical_inverse(k, primes[j]);  // in (0,1)
      z[j] = std::abs(detail::inverse_normal_cdf(0.5 + 0.5 * u));
      norm2 += z[j] * z[j];
    }
    if (norm2 <= 0.0) continue;
    dirs.emplace_back(z);
  }
  return dirs;
}

}  // namespace specgini
