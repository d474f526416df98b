#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "gridcast/types.hpp"

namespace gridcast {

// Small statistics kernels shared by evaluation and tests. All of them are
// expression-friendly: they accept any Eigen dense expression of doubles.

template <class Derived>
double mean_of(const Eigen::MatrixBase<Derived>& x) {
  return x.derived().template cast<double>().mean();
}

// Population (biased) standard deviation.
template <class Derived>
double population_std(const Eigen::MatrixBase<Derived>& x) {
  const double mu = x.derived().template cast<double>().mean();
  const double var = (x.derived().template cast<double>().array() - mu).square().mean();
  return std::sqrt(var);
}

// Pearson correlation; empty when either side has zero variance.
template <class A, class B>
std::optional<double> pearson(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const auto av = a.derived().template cast<double>().reshaped();
  const auto bv = b.derived().template cast<double>().reshaped();
  const double ma = av.mean();
  const double mb = bv.mean();
  const double ca = (av.array() - ma).square().sum();
  const double cb = (bv.array() - mb).square().sum();
  if (ca <= 0.0 || cb <= 0.0) return std::nullopt;
  const double cov = ((av.array() - ma) * (bv.array() - mb)).sum();
  return cov / std::sqrt(ca * cb);
}

// Lag-1 Pearson autocorrelation of a series.
template <class Derived>
std::optional<double> lag1_autocorr(const Eigen::MatrixBase<Derived>& series) {
  const Index n = series.size();
  if (n < 3) return std::nullopt;
  Vector s = series.derived().template cast<double>().reshaped();
  return pearson(s.head(n - 1), s.tail(n - 1));
}

// Quantile with linear interpolation between order statistics,
// q in [0, 1]; the input is copied and sorted.
inline double quantile_linear(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 1) return values[0];
  const double pos = q * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= n) return values[n - 1];
  const double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

}  // namespace gridcast
