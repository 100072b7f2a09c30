#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>

#include "diamondplot/dataset.hpp"

namespace diamondplot {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Summary statistics of a DataSet. Variances use the n-1 denominator.
///
/// pearson_r is empty when either variance is zero. The fits are empty when
/// they are undefined for the data (zero variance in variable 1 for OLS,
/// a degenerate or vertical best line for Deming).
struct SummaryStats {
  std::size_t n = 0;
  double mean1 = 0.0;
  double mean2 = 0.0;
  double var1 = 0.0;
  double var2 = 0.0;
  double cov = 0.0;
  std::optional<double> pearson_r;
  std::optional<LineFit> ols;
  double deming_delta = 1.0;
  std::optional<LineFit> deming;
};

/// Second moments about the mean, n-1 denominator.
struct Moments {
  std::size_t n = 0;
  double mean1 = 0.0;
  double mean2 = 0.0;
  double s11 = 0.0;
  double s22 = 0.0;
  double s12 = 0.0;
};

/// Two-pass moments. Throws InsufficientData when fewer than two points.
Moments moments(std::span<const Point2> points);

/// Throws InsufficientData when n < 2.
SummaryStats summary(const DataSet& data, double deming_delta = 1.0);

/// Least squares of variable 2 on variable 1. Throws DegenerateFit when
/// variable 1 has zero variance.
LineFit ols_fit(const DataSet& data);

/// Closed-form Deming estimator. `delta` is the ratio of the error variance
/// of variable 2 to that of variable 1; delta = 1 is orthogonal regression.
///
/// When the covariance vanishes and the spread matches delta exactly all
/// directions fit equally well; the non-negative branch, slope sqrt(delta),
/// is returned. Throws DegenerateFit when all points coincide or when the
/// best line is vertical, InvalidArgument when delta <= 0.
LineFit deming_fit(const DataSet& data, double delta = 1.0);
LineFit deming_fit(const Moments& m, double delta = 1.0);

/// Marker for a point cloud whose covariance has equal eigenvalues.
struct IsotropicCloud {};

using AxisAngle = std::variant<double, IsotropicCloud>;

/// Direction of the leading covariance eigenvector, in degrees within
/// (-90, 90], measured from the positive horizontal axis (data-up).
/// Throws InsufficientData when fewer than three points.
AxisAngle principal_axis_angle(std::span<const Point2> points);

}  // namespace diamondplot
