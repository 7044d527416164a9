#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specgini {

enum class DistortionFamily {
  Identity,          // v(t) = t
  Step,              // jumps from 0 to 1 at a threshold
  Zonoid,            // v(t) = min(t/alpha, 1): mean of the lower alpha-tail
  DonaldsonWeymark,  // v(t) = 1 - (1-t)^(1/alpha), aversion exponent 1/alpha
  Power,             // v(t) = t^b, b >= 1 (the convex dual of DonaldsonWeymark)
  PiecewiseLinear,   // user-supplied breakpoints
};

// A distortion (weight-generating) function v on [0,1]: nondecreasing with
// v(0) = 0 and v(1) = 1. Concave instances express inequality aversion: the
// rank weights v(i/n) - v((i-1)/n) are then nonincreasing, so low ranks get
// more weight.
class DistortionSpec {
 public:
  static DistortionSpec identity() { return DistortionSpec(DistortionFamily::Identity, 1.0); }

  // 0 below alpha, 1 at and above it; selects the alpha-quantile.
  static DistortionSpec step(double alpha) {
    require_alpha(alpha);
    DistortionSpec s(DistortionFamily::Step, alpha);
    s.step_closed_ = true;
    return s;
  }

  static DistortionSpec zonoid(double alpha) {
    require_alpha(alpha);
    return DistortionSpec(DistortionFamily::Zonoid, alpha);
  }

  static DistortionSpec donaldson_weymark(double alpha) {
    require_alpha(alpha);
    return DistortionSpec(DistortionFamily::DonaldsonWeymark, alpha);
  }

  static DistortionSpec power(double exponent) {
    if (!(exponent >= 1.0) || !std::isfinite(exponent))
      throw std::invalid_argument("power distortion requires exponent >= 1");
    return DistortionSpec(DistortionFamily::Power, exponent);
  }

  // Breakpoints must start at (0,0), end at (1,1), have strictly increasing
  // abscissae and nondecreasing values.
  static DistortionSpec piecewise_linear(std::vector<std::pair<double, double>> pts) {
    if (pts.size() < 2)
      throw std::invalid_argument("piecewise-linear distortion needs at least two breakpoints");
    for (const auto& [t, val] : pts)
      if (!std::isfinite(t) || !std::isfinite(val))
        throw std::invalid_argument("piecewise-linear breakpoints must be finite");
    constexpr double kSnap = 1e-12;
    if (std::abs(pts.front().first) > kSnap || std::abs(pts.front().second) > kSnap ||
        std::abs(pts.back().first - 1.0) > kSnap || std::abs(pts.back().second - 1.0) > kSnap)
      throw std::invalid_argument("piecewise-linear distortion must start at (0,0) and end at (1,1)");
    pts.front() = {0.0, 0.0};
    pts.back() = {1.0, 1.0};
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (!(pts[k].first > pts[k - 1].first))
        throw std::invalid_argument("piecewise-linear breakpoints must be strictly increasing in t");
      if (pts[k].second < pts[k - 1].second - kSnap)
        throw std::invalid_argument("piecewise-linear distortion values must be nondecreasing");
    }
    DistortionSpec s(DistortionFamily::PiecewiseLinear, 0.0);
    s.breakpoints_ = std::move(pts);
    return s;
  }

  DistortionFamily family() const { return family_; }
  double parameter() const { return param_; }
  const std::vector<std::pair<double, double>>& breakpoints() const { return breakpoints_; }

  double evaluate(double t) const {
    if (!(t >= 0.0) || !(t <= 1.0))
      throw std::domain_error("distortion argument must lie in [0,1]");
    switch (family_) {
      case DistortionFamily::Identity:
        return t;
      case DistortionFamily::Step:
        return (step_closed_ ? t >= param_ : t > param_) ? 1.0 : 0.0;
      case DistortionFamily::Zonoid:
        return std::min(t / param_, 1.0);
      case DistortionFamily::DonaldsonWeymark:
        return 1.0 - std::pow(1.0 - t, 1.0 / param_);
      case DistortionFamily::Power:
        return std::pow(t, param_);
      case DistortionFamily::PiecewiseLinear:
        return eval_piecewise(t);
    }
    return t;  // unreachable
  }

  double operator()(double t) const { return evaluate(t); }

  // Dual distortion: dual(v)(t) = 1 - v(1-t). Concave specs have convex
  // duals and vice versa; applying dual twice restores the original
  // function pointwise.
  DistortionSpec dual() const {
    switch (family_) {
      case DistortionFamily::Identity:
        return identity();
      case DistortionFamily::Step: {
        // 1 - v(1-t) flips the threshold to 1-alpha and the jump side.
        DistortionSpec s(DistortionFamily::Step, 1.0 - param_);
        s.step_closed_ = !step_closed_;
        return s;
      }
      case DistortionFamily::Zonoid: {
        // max(0, (t-1+alpha)/alpha) as an explicit piecewise-linear spec.
        if (param_ >= 1.0) return piecewise_linear({{0.0, 0.0}, {1.0, 1.0}});
        return piecewise_linear({{0.0, 0.0}, {1.0 - param_, 0.0}, {1.0, 1.0}});
      }
      case DistortionFamily::DonaldsonWeymark:
        return power(1.0 / param_);
      case DistortionFamily::Power: {
        DistortionSpec s(DistortionFamily::DonaldsonWeymark, 1.0 / param_);
        return s;
      }
      case DistortionFamily::PiecewiseLinear: {
        std::vector<std::pair<double, double>> pts(breakpoints_.rbegin(), breakpoints_.rend());
        for (auto& [t, val] : pts) {
          t = 1.0 - t;
          val = 1.0 - val;
        }
        DistortionSpec s(DistortionFamily::PiecewiseLinear, 0.0);
        s.breakpoints_ = std::move(pts);
        return s;
      }
    }
    return identity();  // unreachable
  }

  bool concave() const {
    switch (family_) {
      case DistortionFamily::Identity:
      case DistortionFamily::Zonoid:
      case DistortionFamily::DonaldsonWeymark:
        return true;
      case DistortionFamily::Step:
        return false;
      case DistortionFamily::Power:
        return param_ <= 1.0;
      case DistortionFamily::PiecewiseLinear: {
        double prev_slope = std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
          const double slope = (breakpoints_[k].second - breakpoints_[k - 1].second) /
                               (breakpoints_[k].first - breakpoints_[k - 1].first);
          if (slope > prev_slope + 1e-12 * (1.0 + std::abs(prev_slope))) return false;
          prev_slope = std::min(prev_slope, slope);
        }
        return true;
      }
    }
    return false;  // unreachable
  }

  // Canonical CLI syntax; piecewise specs list their breakpoints inline.
  std::string to_string() const {
    switch (family_) {
      case DistortionFamily::Identity:
        return "identity";
      case DistortionFamily::Step:
        return (step_closed_ ? "step:" : "step-above:") + format_number(param_);
      case DistortionFamily::Zonoid:
        return "zonoid:" + format_number(param_);
      case DistortionFamily::DonaldsonWeymark:
        return "dw:" + format_number(param_);
      case DistortionFamily::Power:
        return "power:" + format_number(param_);
      case DistortionFamily::PiecewiseLinear: {
        std::string out = "piecewise:";
        for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
          if (k) out += ';';
          out += format_number(breakpoints_[k].first) + ',' + format_number(breakpoints_[k].second);
        }
        return out;
      }
    }
    return "identity";  // unreachable
  }

 private:
  DistortionSpec(DistortionFamily f, double p) : family_(f), param_(p) {}

  static void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
      throw std::invalid_argument("distortion parameter alpha must lie in (0,1]");
  }

  double eval_piecewise(double t) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                               [](double lhs, const std::pair<double, double>& bp) { return lhs < bp.first; });
    if (it == breakpoints_.begin()) return breakpoints_.front().second;
    if (it == breakpoints_.end()) return breakpoints_.back().second;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (t - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
  }

  static std::string format_number(double x) {
    // Shortest decimal form that parses back to the same double.
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
      std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
      if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
  }

  DistortionFamily family_;
  double param_;
  bool step_closed_ = true;
  std::vector<std::pair<double, double>> breakpoints_;
};

// Parses the spec syntax: identity | step:A | zonoid:A | dw:A | power:B |
// piecewise:t,v;t,v;... Throws std::invalid_argument on anything else.
inline DistortionSpec parse_distortion(const std::string& text) {
  auto parse_num = [&](const std::string& s) {
    std::size_t pos = 0;
    double val;
    try {
      val = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad numeric parameter in distortion spec '" + text + "'");
    }
    if (pos != s.size())
      throw std::invalid_argument("bad numeric parameter in distortion spec '" + text + "'");
    return val;
  };
  if (text == "identity") return DistortionSpec::identity();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    if (head == "step") return DistortionSpec::step(parse_num(tail));
    if (head == "step-above") {
      auto d = DistortionSpec::step(1.0 - parse_num(tail)).dual();
      return d;
    }
    if (head == "zonoid") return DistortionSpec::zonoid(parse_num(tail));
    if (head == "dw") return DistortionSpec::donaldson_weymark(parse_num(tail));
    if (head == "power") return DistortionSpec::power(parse_num(tail));
    if (head == "piecewise") {
      std::vector<std::pair<double, double>> pts;
      std::size_t start = 0;
      while (start <= tail.size()) {
        auto end = tail.find(';', start);
        if (end == std::string::npos) end = tail.size();
        const std::string item = tail.substr(start, end - start);
        const auto comma = item.find(',');
        if (comma == std::string::npos)
          throw std::invalid_argument("piecewise spec items must be 't,v' pairs");
        pts.emplace_back(parse_num(item.substr(0, comma)), parse_num(item.substr(comma + 1)));
        start = end + 1;
      }
      return DistortionSpec::piecewise_linear(std::move(pts));
    }
  }
  throw std::invalid_argument("unknown distortion spec '" + text + "'");
}

// Rank weights of the empirical spectral value: w_i = v(i/n) - v((i-1)/n),
// applied to data ordered from below. Differences of the closed-form v are
// used rather than an accumulated spectrum, so the weights always sum to 1.
struct RankWeights {
  std::size_t n = 0;
  std::vector<double> weights;
};

inline RankWeights empirical_weights(const DistortionSpec& v, std::size_t n) {
  if (n == 0) throw std::domain_error("empirical weights need a positive population size");
  RankWeights rw;
  rw.n = n;
  rw.weights.resize(n);
  double prev = 0.0;  // v(0) = 0
  for (std::size_t i = 1; i <= n; ++i) {
    const double cur = v.evaluate(static_cast<double>(i) / static_cast<double>(n));
    rw.weights[i - 1] = cur - prev;
    prev = cur;
  }
  return rw;
}

inline DistortionSpec make_family_member(DistortionFamily family, double alpha) {
  switch (family) {
    case DistortionFamily::Identity:
      return DistortionSpec::identity();
    case DistortionFamily::Step:
      return DistortionSpec::step(alpha);
    case DistortionFamily::Zonoid:
      return DistortionSpec::zonoid(alpha);
    case DistortionFamily::DonaldsonWeymark:
      return DistortionSpec::donaldson_weymark(alpha);
    case DistortionFamily::Power:
      return DistortionSpec::power(std::max(alpha, 1.0));
    case DistortionFamily::PiecewiseLinear:
      throw std::invalid_argument("piecewise-linear specs are not an alpha-parameterized family");
  }
  return DistortionSpec::identity();  // unreachable
}

// True iff the family is pointwise ordered in alpha with one consistent
// direction across the whole grid. Both the zonoid and Donaldson-Weymark
// families qualify (their members decrease pointwise as alpha grows, i.e.
// increase with the aversion exponent 1/alpha), which is what makes their
// representative endowments nest across alpha.
inline bool family_is_monotone_in_alpha(DistortionFamily family,
                                        const std::vector<double>& t_grid,
                                        const std::vector<double>& alpha_grid) {
  for (std::size_t k = 1; k < alpha_grid.size(); ++k)
    if (!(alpha_grid[k] > alpha_grid[k - 1]))
      throw std::invalid_argument("alpha grid must be strictly increasing");
  if (alpha_grid.size() <= 1) return true;
  constexpr double kTol = 1e-12;
  int direction = 0;
  std::vector<double> prev, cur;
  prev.reserve(t_grid.size());
  for (double t : t_grid) prev.push_back(make_family_member(family, alpha_grid.front()).evaluate(t));
  for (std::size_t k = 1; k < alpha_grid.size(); ++k) {
    const DistortionSpec v = make_family_member(family, alpha_grid[k]);
    cur.clear();
    for (double t : t_grid) cur.push_back(v.evaluate(t));
    for (std::size_t j = 0; j < t_grid.size(); ++j) {
      const double diff = cur[j] - prev[j];
      if (diff > kTol) {
        if (direction < 0) return false;
        direction = 1;
      } else if (diff < -kTol) {
        if (direction > 0) return false;
        direction = -1;
      }
    }
    prev.swap(cur);
  }
  return true;
}

}  // namespace specgini
