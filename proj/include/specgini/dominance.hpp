#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgini/directions.hpp"
#include "specgini/distortion.hpp"
#include "specgini/endowment.hpp"
#include "specgini/mre.hpp"

namespace specgini {

// Closed angle interval within [0, pi/2]; restricts the tested price
// directions in the plane.
struct AngleInterval {
  double lo = 0.0;
  double hi = kHalfPi;
};

// Outcome of a uniform Gini dominance test dominates(A, B, v):
//   S_v(p'A) >= S_v(p'B) for every tested direction p,
// i.e. A's representative priced endowments are pointwise at least B's (A is
// the less unequal side, its representative endowment lies weakly above
// B's). worst_margin is the minimum of the difference over the tested set,
// witness the direction attaining it. exact is true for the two-attribute
// critical-angle procedure, false for sampled direction grids.
struct DominanceVerdict {
  bool holds = false;
  double worst_margin = 0.0;
  std::vector<double> witness;
  bool exact = false;
  double tolerance = 0.0;
  std::string restricted_to;
};

struct DirectionalMin {
  double margin = 0.0;
  double theta = 0.0;
};

// Exact minimum over theta in [lo, hi] of
//   g(theta) = S_vA(p_theta' A) - S_vB(p_theta' B).
//
// On any open arc between consecutive critical angles of A and B the
// ascending order of each matrix's projected rows is constant, so on that
// arc S(p'X) = p'z for the arc's fixed supporting point z and
//   g(theta) = c1*cos(theta) + c2*sin(theta),   c = zA - zB.
// Such a sinusoid has its zeros exactly pi apart: if it is nonnegative at
// both endpoints of an arc shorter than pi it cannot dip below zero inside
// (two distinct zeros would have to be less than pi apart). All arcs here
// are shorter than pi/2, so checking arc endpoints decides nonnegativity
// exactly; adding the interior stationary points of each arc also yields
// the exact minimum value and its location.
inline DirectionalMin directional_margin_2d(const EndowmentMatrix& A, const DistortionSpec& vA,
                                            const EndowmentMatrix& B, const DistortionSpec& vB,
                                            double lo = 0.0, double hi = kHalfPi) {
  if (A.cols() != 2 || B.cols() != 2)
    throw std::domain_error("the exact directional margin is defined for two attributes only");
  if (!(lo >= 0.0) || !(hi <= kHalfPi) || !(lo < hi))
    throw std::invalid_argument("direction interval must satisfy 0 <= lo < hi <= pi/2");

  std::vector<double> angles{lo, hi};
  for (const EndowmentMatrix* X : {&A, &B})
    for (double a : critical_angles_2d(*X))
      if (a > lo + 1e-12 && a < hi - 1e-12) angles.push_back(a);
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [](double a, double b) { return b - a <= 1e-12; }),
               angles.end());

  const std::vector<double> wA = empirical_weights(vA, A.rows()).weights;
  const std::vector<double> wB = empirical_weights(vB, B.rows()).weights;
  std::vector<std::size_t> order;
  std::vector<double> proj;

  DirectionalMin best{std::numeric_limits<double>::infinity(), lo};
  for (std::size_t k = 1; k < angles.size(); ++k) {
    const double a = angles[k - 1], b = angles[k];
    const double mid = 0.5 * (a + b);
    const auto zA = detail::supporting_point_2d(A, wA, mid, order, proj);
    const auto zB = detail::supporting_point_2d(B, wB, mid, order, proj);
    const double c1 = zA[0] - zB[0], c2 = zA[1] - zB[1];
    auto consider = [&](double theta) {
      const double g = c1 * std::cos(theta) + c2 * std::sin(theta);
      if (g < best.margin) best = {g, theta};
    };
    consider(a);
    consider(b);
    const double phi = std::atan2(c2, c1);
    for (double station : {phi - 2.0 * kPi, phi - kPi, phi, phi + kPi}) {
      if (station > a && station < b) consider(station);
    }
  }
  return best;
}

namespace detail {

inline double default_dominance_tolerance(const EndowmentMatrix& A, const EndowmentMatrix& B) {
  return 1e-9 * (1.0 + std::max(A.max_abs(), B.max_abs()));
}

}  // namespace detail

// Uniform Gini dominance of A over B under v, optionally restricted to an
// angle interval P (two attributes). With d >= 3 the test runs on a
// deterministic quasi-uniform direction grid and the verdict is flagged
// approximate. A negative tolerance requests 1e-9 * (1 + max |entry|).
inline DominanceVerdict dominates(const EndowmentMatrix& A, const EndowmentMatrix& B,
                                  const DistortionSpec& v,
                                  std::optional<AngleInterval> P = std::nullopt,
                                  double tolerance = -1.0, std::size_t directions = 2000) {
  if (A.cols() != B.cols())
    throw std::domain_error("dominance needs matching attribute counts");
  if (!v.concave())
    throw std::domain_error("uniform Gini dominance requires a concave distortion");
  DominanceVerdict verdict;
  verdict.tolerance = tolerance >= 0.0 ? tolerance : detail::default_dominance_tolerance(A, B);

  if (A.cols() == 2) {
    const AngleInterval iv = P.value_or(AngleInterval{});
    const DirectionalMin dm = directional_margin_2d(A, v, B, v, iv.lo, iv.hi);
    verdict.worst_margin = dm.margin;
    verdict.witness = {std::cos(dm.theta), std::sin(dm.theta)};
    verdict.exact = true;
    if (P) verdict.restricted_to = "angles [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "] rad";
  } else {
    if (P) throw std::invalid_argument("angle intervals restrict two-attribute tests only");
    double worst = std::numeric_limits<double>::infinity();
    std::vector<double> witness;
    for (const Direction& p : direction_grid(A.cols(), directions)) {
      const double g = priced_spectral(A, p, v) - priced_spectral(B, p, v);
      if (g < worst) {
        worst = g;
        witness = p.coords();
      }
    }
    verdict.worst_margin = worst;
    verdict.witness = std::move(witness);
    verdict.exact = false;
  }
  verdict.holds = verdict.worst_margin >= -verdict.tolerance;
  return verdict;
}

// Dominance over an explicit finite direction set (the d >= 3 form of a
// P-restriction). Always sampled, never exact.
inline DominanceVerdict dominates_over(const EndowmentMatrix& A, const EndowmentMatrix& B,
                                       const DistortionSpec& v, const std::vector<Direction>& P,
                                       double tolerance = -1.0) {
  if (P.empty()) throw std::invalid_argument("direction set must be nonempty");
  if (A.cols() != B.cols())
    throw std::domain_error("dominance needs matching attribute counts");
  if (!v.concave())
    throw std::domain_error("uniform Gini dominance requires a concave distortion");
  DominanceVerdict verdict;
  verdict.tolerance = tolerance >= 0.0 ? tolerance : detail::default_dominance_tolerance(A, B);
  double worst = std::numeric_limits<double>::infinity();
  for (const Direction& p : P) {
    const double g = priced_spectral(A, p, v) - priced_spectral(B, p, v);
    if (g < worst) {
      worst = g;
      verdict.witness = p.coords();
    }
  }
  verdict.worst_margin = worst;
  verdict.exact = false;
  verdict.restricted_to = "explicit set of " + std::to_string(P.size()) + " directions";
  verdict.holds = verdict.worst_margin >= -verdict.tolerance;
  return verdict;
}

// Family-level (doubly uniform) dominance: the per-alpha verdicts plus
// their conjunction, with the alpha attaining the worst margin.
struct FamilyDominanceVerdict {
  std::vector<double> alphas;
  std::vector<DominanceVerdict> verdicts;
  bool all_hold = false;
  double worst_alpha = 0.0;
  double worst_margin = 0.0;
};

inline FamilyDominanceVerdict dominates_family(const EndowmentMatrix& A, const EndowmentMatrix& B,
                                               DistortionFamily family,
                                               const std::vector<double>& alpha_grid,
                                               std::optional<AngleInterval> P = std::nullopt,
                                               double tolerance = -1.0,
                                               std::size_t directions = 2000) {
  if (alpha_grid.empty()) throw std::invalid_argument("alpha grid must be nonempty");
  FamilyDominanceVerdict fam;
  fam.alphas = alpha_grid;
  fam.all_hold = true;
  fam.worst_margin = std::numeric_limits<double>::infinity();
  for (double alpha : alpha_grid) {
    DominanceVerdict v = dominates(A, B, make_family_member(family, alpha), P, tolerance, directions);
    fam.all_hold = fam.all_hold && v.holds;
    if (v.worst_margin < fam.worst_margin) {
      fam.worst_margin = v.worst_margin;
      fam.worst_alpha = alpha;
    }
    fam.verdicts.push_back(std::move(v));
  }
  return fam;
}

// Finite support-function sample for d >= 3, where exact facet enumeration
// is out of reach: quasi-uniform directions with their priced spectral
// values. Values at distinct directions are independent of evaluation
// order.
struct SupportSample {
  std::vector<std::vector<double>> directions;
  std::vector<double> values;
  std::size_t resolution = 0;
};

inline SupportSample support_sample(const EndowmentMatrix& X, const DistortionSpec& v,
                                    std::size_t resolution) {
  SupportSample s;
  s.resolution = resolution;
  for (const Direction& p : direction_grid(X.cols(), resolution)) {
    s.directions.push_back(p.coords());
    s.values.push_back(priced_spectral(X, p, v));
  }
  return s;
}

}  // namespace specgini
