#include "diamondplot/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "diamondplot/error.hpp"

namespace diamondplot {

Moments moments(std::span<const Point2> points) {
  if (points.size() < 2) {
    throw Error(ErrorCode::InsufficientData,
                "at least 2 points are required, got " +
                    std::to_string(points.size()));
  }
  Moments m;
  m.n = points.size();
  const double n = static_cast<double>(m.n);
  double sum1 = 0.0, sum2 = 0.0;
  for (const Point2& p : points) {
    sum1 += p.a1;
    sum2 += p.a2;
  }
  m.mean1 = sum1 / n;
  m.mean2 = sum2 / n;
  for (const Point2& p : points) {
    const double d1 = p.a1 - m.mean1;
    const double d2 = p.a2 - m.mean2;
    m.s11 += d1 * d1;
    m.s22 += d2 * d2;
    m.s12 += d1 * d2;
  }
  m.s11 /= n - 1.0;
  m.s22 /= n - 1.0;
  m.s12 /= n - 1.0;
  return m;
}

namespace {

std::optional<double> correlation(const Moments& m) {
  if (m.s11 <= 0.0 || m.s22 <= 0.0) return std::nullopt;
  const double r = m.s12 / std::sqrt(m.s11 * m.s22);
  return std::clamp(r, -1.0, 1.0);
}

LineFit ols_from(const Moments& m) {
  if (m.s11 <= 0.0) {
    throw Error(ErrorCode::DegenerateFit,
                "variable 1 has zero variance; least squares line is undefined");
  }
  const double slope = m.s12 / m.s11;
  return {slope, m.mean2 - slope * m.mean1};
}

}  // namespace

SummaryStats summary(const DataSet& data, double deming_delta) {
  const Moments m = moments(data.values);
  SummaryStats s;
  s.n = m.n;
  s.mean1 = m.mean1;
  s.mean2 = m.mean2;
  s.var1 = m.s11;
  s.var2 = m.s22;
  s.cov = m.s12;
  s.pearson_r = correlation(m);
  if (m.s11 > 0.0) s.ols = ols_from(m);
  s.deming_delta = deming_delta;
  try {
    s.deming = deming_fit(m, deming_delta);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateFit) throw;
  }
  return s;
}

LineFit ols_fit(const DataSet& data) { return ols_from(moments(data.values)); }

LineFit deming_fit(const Moments& m, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::InvalidArgument,
                "deming delta must be positive, got " + std::to_string(delta));
  }
  if (m.s11 == 0.0 && m.s22 == 0.0) {
    throw Error(ErrorCode::DegenerateFit,
                "all points coincide; no regression line is defined");
  }
  const double spread = m.s22 - delta * m.s11;
  double slope = 0.0;
  if (m.s12 != 0.0) {
    const double root = std::sqrt(spread * spread + 4.0 * delta * m.s12 * m.s12);
    // Same root, two algebraic forms; pick the one without cancellation.
    slope = spread >= 0.0 ? (spread + root) / (2.0 * m.s12)
                          : 2.0 * delta * m.s12 / (root - spread);
  } else if (spread < 0.0) {
    slope = 0.0;
  } else if (spread == 0.0) {
    slope = std::sqrt(delta);
  } else {
    throw Error(ErrorCode::DegenerateFit,
                "best-fit line is vertical; slope is unbounded");
  }
  return {slope, m.mean2 - slope * m.mean1};
}

LineFit deming_fit(const DataSet& data, double delta) {
  return deming_fit(moments(data.values), delta);
}

AxisAngle principal_axis_angle(std::span<const Point2> points) {
  if (points.size() < 3) {
    throw Error(ErrorCode::InsufficientData,
                "principal axis needs at least 3 points, got " +
                    std::to_string(points.size()));
  }
  const Moments m = moments(points);
  const double diff = m.s11 - m.s22;
  const double gap = std::hypot(diff, 2.0 * m.s12);  // eigenvalue difference
  const double trace = m.s11 + m.s22;
  if (!(gap > 1e-12 * trace)) return IsotropicCloud{};

  double deg = 0.5 * std::atan2(2.0 * m.s12, diff) * 180.0 / std::numbers::pi;
  if (deg <= -90.0) deg += 180.0;
  return deg;
}

}  // namespace diamondplot
