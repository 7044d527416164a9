#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "specgini/distortion.hpp"

namespace specgini {

// Empirical distribution on n real endowments, each with probability 1/n.
// Immutable; the sorted view is built once at construction.
class Sample1D {
 public:
  explicit Sample1D(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("sample must contain at least one value");
    for (double x : values_)
      if (!std::isfinite(x)) throw std::invalid_argument("sample values must be finite");
    sorted_ = values_;
    std::sort(sorted_.begin(), sorted_.end());
  }

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& sorted() const { return sorted_; }

  double mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(size());
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : values_) m = std::max(m, std::abs(x));
    return m;
  }

  // Left-continuous empirical quantile: Q(t) = x_(ceil(t*n)) for 0 < t <= 1.
  double quantile(double t) const {
    if (!(t > 0.0) || !(t <= 1.0))
      throw std::domain_error("quantile argument must lie in (0,1]");
    return sorted_[quantile_rank(t, size()) - 1];
  }

  // 1-based order statistic index ceil(t*n), guarded against the case where
  // t was produced as i/n and t*n rounds a hair above the integer i.
  static std::size_t quantile_rank(double t, std::size_t n) {
    const double scaled = t * static_cast<double>(n);
    auto k = static_cast<long long>(std::ceil(scaled - 1e-9));
    if (k < 1) k = 1;
    if (k > static_cast<long long>(n)) k = static_cast<long long>(n);
    return static_cast<std::size_t>(k);
  }

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
};

// Spectral value S(X) = sum_i x_(i) * [v(i/n) - v((i-1)/n)]: a rank-weighted
// mean of the ordered data, the representative (equally distributed
// equivalent) endowment under the distortion v.
inline double spectral_value(const Sample1D& s, const DistortionSpec& v) {
  const RankWeights rw = empirical_weights(v, s.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) acc += s.sorted()[i] * rw.weights[i];
  return acc;
}

enum class GiniMode { Absolute, Relative };

// mean - spectral value (absolute), optionally divided by the mean.
inline double generalized_gini(const Sample1D& s, const DistortionSpec& v, GiniMode mode) {
  const double mu = s.mean();
  const double gap = mu - spectral_value(s, v);
  if (mode == GiniMode::Absolute) return gap;
  if (!(mu > 0.0))
    throw std::domain_error("relative generalized Gini requires a strictly positive mean");
  return gap / mu;
}

// Absolute S-Gini index with aversion exponent beta >= 1; rank weights are
// ((n-i+1)/n)^beta - ((n-i)/n)^beta. beta = 1 gives 0, beta = 2 the
// classical absolute Gini index.
inline double s_gini(const Sample1D& s, double beta) {
  if (!(beta >= 1.0)) throw std::domain_error("S-Gini aversion exponent must be >= 1");
  const auto n = static_cast<double>(s.size());
  double spectral = 0.0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const double w = std::pow((n - static_cast<double>(i) + 1.0) / n, beta) -
                     std::pow((n - static_cast<double>(i)) / n, beta);
    spectral += s.sorted()[i - 1] * w;
  }
  return s.mean() - spectral;
}

}  // namespace specgini
