#include "diamondplot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "diamondplot/error.hpp"

namespace diamondplot {

std::string_view to_string(Orientation o) noexcept {
  switch (o) {
    case Orientation::Diamond: return "diamond";
    case Orientation::ScatterV1H: return "scatter";
    case Orientation::ScatterV2H: return "scatter-swapped";
  }
  return "diamond";
}

Orientation parse_orientation(std::string_view name) {
  if (name == "diamond") return Orientation::Diamond;
  if (name == "scatter") return Orientation::ScatterV1H;
  if (name == "scatter-swapped") return Orientation::ScatterV2H;
  throw Error(ErrorCode::InvalidArgument,
              "unknown mode '" + std::string(name) +
                  "' (expected diamond, scatter or scatter-swapped)");
}

ViewTransform ViewTransform::rotate45_ccw() noexcept {
  constexpr double c = std::numbers::sqrt2 / 2.0;
  return {c, -c, c, c, 0.0, 0.0};
}

ViewTransform ViewTransform::compose(const ViewTransform& in) const noexcept {
  return {
      xx * in.xx + xy * in.yx, xx * in.xy + xy * in.yy,
      yx * in.xx + yy * in.yx, yx * in.xy + yy * in.yy,
      xx * in.tx + xy * in.ty + tx, yx * in.tx + yy * in.ty + ty,
  };
}

Point2 apply(const ViewTransform& t, Point2 p) noexcept {
  return {t.xx * p.a1 + t.xy * p.a2 + t.tx, t.yx * p.a1 + t.yy * p.a2 + t.ty};
}

ViewTransform invert(const ViewTransform& t) {
  const double det = t.determinant();
  if (det == 0.0 || !std::isfinite(det)) {
    throw Error(ErrorCode::SingularTransform,
                "transform has a singular linear part");
  }
  const double ixx = t.yy / det;
  const double ixy = -t.xy / det;
  const double iyx = -t.yx / det;
  const double iyy = t.xx / det;
  return {ixx, ixy, iyx, iyy, -(ixx * t.tx + ixy * t.ty),
          -(iyx * t.tx + iyy * t.ty)};
}

namespace {

AxisBounds padded(double lo, double hi, double padding) {
  const double pad = (hi - lo) * padding;
  return {lo - pad, hi + pad};
}

}  // namespace

double to_unit(const AxisBounds& b, double value) noexcept {
  if (b.degenerate()) return 0.5;
  return std::clamp((value - b.min) / b.range(), 0.0, 1.0);
}

double from_unit(const AxisBounds& b, double unit) noexcept {
  if (b.degenerate()) return b.min;
  return b.min + unit * b.range();
}

NormalizedDataSet normalize(const DataSet& data, double padding,
                            AxisScale scale) {
  if (data.empty()) throw Error(ErrorCode::EmptyData, "dataset is empty");
  if (!(padding >= 0.0 && padding < 0.5)) {
    throw Error(ErrorCode::InvalidArgument,
                "padding must lie in [0, 0.5), got " + std::to_string(padding));
  }

  double lo1 = data.values.front().a1, hi1 = lo1;
  double lo2 = data.values.front().a2, hi2 = lo2;
  for (const Point2& p : data.values) {
    lo1 = std::min(lo1, p.a1);
    hi1 = std::max(hi1, p.a1);
    lo2 = std::min(lo2, p.a2);
    hi2 = std::max(hi2, p.a2);
  }
  if (scale == AxisScale::Shared) {
    lo1 = lo2 = std::min(lo1, lo2);
    hi1 = hi2 = std::max(hi1, hi2);
  }

  NormalizedDataSet out;
  out.bounds1 = padded(lo1, hi1, padding);
  out.bounds2 = padded(lo2, hi2, padding);
  out.padding = padding;
  out.scale = scale;
  out.points.reserve(data.size());
  for (const Point2& p : data.values) {
    out.points.push_back({to_unit(out.bounds1, p.a1), to_unit(out.bounds2, p.a2)});
  }
  return out;
}

std::vector<Point2> denormalize(const NormalizedDataSet& n) {
  std::vector<Point2> out;
  out.reserve(n.points.size());
  for (const Point2& p : n.points) {
    out.push_back({from_unit(n.bounds1, p.a1), from_unit(n.bounds2, p.a2)});
  }
  return out;
}

Rect drawing_area(Orientation o, Viewport viewport, const Margins& m) {
  const double avail_w = viewport.width - m.left - m.right;
  const double avail_h = viewport.height - m.top - m.bottom;
  if (!(viewport.width > 0.0 && viewport.height > 0.0) || !(avail_w > 0.0) ||
      !(avail_h > 0.0) || !std::isfinite(avail_w) || !std::isfinite(avail_h)) {
    throw Error(ErrorCode::InvalidViewport,
                "viewport " + std::to_string(viewport.width) + "x" +
                    std::to_string(viewport.height) +
                    " leaves no drawing area inside the margins");
  }
  const double aspect =
      o == Orientation::Diamond ? kDiamondAspect : kScatterAspect;
  double w = avail_w;
  double h = avail_w / aspect;
  if (h > avail_h) {
    h = avail_h;
    w = avail_h * aspect;
  }
  return {m.left + (avail_w - w) / 2.0, m.top + (avail_h - h) / 2.0, w, h};
}

ViewTransform make_transform(Orientation o, Viewport viewport,
                             const Margins& margins) {
  const Rect area = drawing_area(o, viewport, margins);
  switch (o) {
    case Orientation::Diamond: {
      // Uniform scale side/sqrt2 times the 45 degree rotation, with the
      // screen y flip folded in. Every coefficient is exactly +-side/2.
      const double half = area.width / 2.0;
      const double cx = area.x + half;
      const double bottom = area.y + area.height;
      return {half, -half, -half, -half, cx, bottom};
    }
    case Orientation::ScatterV1H:
      return {area.width, 0.0, 0.0, -area.height, area.x, area.y + area.height};
    case Orientation::ScatterV2H:
      return {0.0, area.width, -area.height, 0.0, area.x, area.y + area.height};
  }
  return ViewTransform::identity();
}

}  // namespace diamondplot
