#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgini/distortion.hpp"
#include "specgini/sample.hpp"

namespace specgini {

// n x d matrix of individual endowments; row i is individual i's vector of
// attribute levels. Represents the empirical distribution putting mass 1/n
// on each row. Attribute units are arbitrary and may be incommensurable.
class EndowmentMatrix {
 public:
  EndowmentMatrix(std::size_t rows, std::size_t cols, std::vector<double> data,
                  std::vector<std::string> row_labels = {},
                  std::vector<std::string> column_names = {})
      : rows_(rows),
        cols_(cols),
        data_(std::move(data)),
        row_labels_(std::move(row_labels)),
        column_names_(std::move(column_names)) {
    if (rows_ == 0 || cols_ == 0)
      throw std::invalid_argument("endowment matrix must have at least one row and one column");
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("endowment matrix data size does not match its dimensions");
    for (double x : data_)
      if (!std::isfinite(x)) throw std::invalid_argument("endowment entries must be finite");
    if (!row_labels_.empty() && row_labels_.size() != rows_)
      throw std::invalid_argument("row label count does not match the row count");
    if (!column_names_.empty() && column_names_.size() != cols_)
      throw std::invalid_argument("column name count does not match the column count");
  }

  explicit EndowmentMatrix(const std::vector<std::vector<double>>& rows)
      : EndowmentMatrix(rows.size(), rows.empty() ? 0 : rows.front().size(), flatten(rows)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<double>& data() const { return data_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& column_names() const { return column_names_; }

  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  std::vector<double> mean_row() const {
    std::vector<double> mu(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) mu[j] += (*this)(i, j);
    for (double& v : mu) v /= static_cast<double>(rows_);
    return mu;
  }

  // One attribute as a univariate sample.
  Sample1D marginal(std::size_t j) const {
    if (j >= cols_) throw std::domain_error("marginal index out of range");
    std::vector<double> col(rows_);
    for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
    return Sample1D(std::move(col));
  }

 private:
  static std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
    std::vector<double> flat;
    if (rows.empty()) return flat;
    const std::size_t d = rows.front().size();
    flat.reserve(rows.size() * d);
    for (const auto& r : rows) {
      if (r.size() != d) throw std::invalid_argument("all rows must have the same arity");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
  }

  std::size_t rows_, cols_;
  std::vector<double> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> column_names_;
};

// Unit-norm price vector in the nonnegative orthant. Components give the
// relative importance attached to each attribute.
class Direction {
 public:
  explicit Direction(std::vector<double> coords) : p_(std::move(coords)) {
    if (p_.empty()) throw std::invalid_argument("direction needs at least one component");
    double norm2 = 0.0;
    for (double& c : p_) {
      if (!std::isfinite(c)) throw std::invalid_argument("direction components must be finite");
      if (c < 0.0) {
        if (c < -1e-12) throw std::invalid_argument("direction components must be nonnegative");
        c = 0.0;
      }
      norm2 += c * c;
    }
    if (!(norm2 > 0.0)) throw std::invalid_argument("direction must be nonzero");
    const double norm = std::sqrt(norm2);
    for (double& c : p_) c /= norm;
  }

  static Direction from_angle(double theta) {
    return Direction({std::cos(theta), std::sin(theta)});
  }

  static Direction axis(std::size_t j, std::size_t d) {
    std::vector<double> e(d, 0.0);
    e.at(j) = 1.0;
    return Direction(std::move(e));
  }

  std::size_t dim() const { return p_.size(); }
  const std::vector<double>& coords() const { return p_; }
  double operator[](std::size_t j) const { return p_[j]; }

  double dot(std::span<const double> x) const {
    double acc = 0.0;
    for (std::size_t j = 0; j < p_.size(); ++j) acc += p_[j] * x[j];
    return acc;
  }

 private:
  std::vector<double> p_;
};

// Projects every row onto p: the sample of priced endowments p'x_i.
inline std::vector<double> project(const EndowmentMatrix& X, const Direction& p) {
  if (p.dim() != X.cols())
    throw std::domain_error("direction dimension does not match the attribute count");
  std::vector<double> proj(X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i) proj[i] = p.dot(X.row(i));
  return proj;
}

// Representative priced endowment: the spectral value of the priced sample
// p'X. Attribute levels are aggregated first (by the additive score p'x),
// the population second.
inline double priced_spectral(const EndowmentMatrix& X, const Direction& p, const DistortionSpec& v) {
  return spectral_value(Sample1D(project(X, p)), v);
}

// Priced generalized Gini: mean(p'X) - S(p'X), optionally relative to the
// mean (which must then be positive).
inline double priced_gini(const EndowmentMatrix& X, const Direction& p, const DistortionSpec& v,
                          GiniMode mode) {
  return generalized_gini(Sample1D(project(X, p)), v, mode);
}

// Row-wise image A*x + b of every endowment vector. Only nonnegative A keeps
// representative endowments equivariant, so negative entries are rejected.
inline EndowmentMatrix transform_affine(const EndowmentMatrix& X,
                                        const std::vector<std::vector<double>>& A,
                                        const std::vector<double>& b) {
  const std::size_t m = A.size();
  if (m == 0) throw std::invalid_argument("transform matrix must have at least one row");
  for (const auto& row : A) {
    if (row.size() != X.cols())
      throw std::invalid_argument("transform matrix column count must match the attribute count");
    for (double a : row)
      if (!(a >= 0.0)) throw std::domain_error("transform matrix entries must be nonnegative");
  }
  if (b.size() != m) throw std::invalid_argument("offset dimension must match the transform rows");
  std::vector<double> out(X.rows() * m);
  for (std::size_t i = 0; i < X.rows(); ++i) {
    const auto xi = X.row(i);
    for (std::size_t r = 0; r < m; ++r) {
      double acc = b[r];
      for (std::size_t j = 0; j < X.cols(); ++j) acc += A[r][j] * xi[j];
      out[i * m + r] = acc;
    }
  }
  return EndowmentMatrix(X.rows(), m, std::move(out), X.row_labels());
}

}  // namespace specgini
