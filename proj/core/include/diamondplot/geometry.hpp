#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "diamondplot/dataset.hpp"

namespace diamondplot {

/// Which axis arrangement is shown.
///
/// ScatterV2H puts variable 2 on the horizontal axis. It is a coordinate
/// swap, i.e. a rotation and a reflection in one step, so that both axes
/// still increase rightward and upward.
enum class Orientation { Diamond, ScatterV1H, ScatterV2H };

inline constexpr std::array<Orientation, 3> kAllOrientations = {
    Orientation::Diamond, Orientation::ScatterV1H, Orientation::ScatterV2H};

std::string_view to_string(Orientation o) noexcept;
/// Accepts "diamond", "scatter" and "scatter-swapped"; throws InvalidArgument.
Orientation parse_orientation(std::string_view name);

/// 2D affine map  p' = L p + t  with L = [[xx, xy], [yx, yy]].
///
/// Screen-space transforms use the SVG convention: origin top-left, y grows
/// downward. The rotation factory below works in the data-up convention.
struct ViewTransform {
  double xx = 1.0, xy = 0.0;
  double yx = 0.0, yy = 1.0;
  double tx = 0.0, ty = 0.0;

  static ViewTransform identity() noexcept { return {}; }
  static ViewTransform scale(double s) noexcept { return {s, 0, 0, s, 0, 0}; }
  static ViewTransform translate(double dx, double dy) noexcept {
    return {1, 0, 0, 1, dx, dy};
  }
  /// 45 degree counter-clockwise rotation (data-up), cos = sin = sqrt(2)/2.
  static ViewTransform rotate45_ccw() noexcept;

  double determinant() const noexcept { return xx * yy - xy * yx; }

  /// (*this) after (inner).
  ViewTransform compose(const ViewTransform& inner) const noexcept;

  friend bool operator==(const ViewTransform&, const ViewTransform&) = default;
};

Point2 apply(const ViewTransform& t, Point2 p) noexcept;

/// Throws SingularTransform when the linear part has zero determinant.
ViewTransform invert(const ViewTransform& t);

struct AxisBounds {
  double min = 0.0;
  double max = 0.0;

  double range() const noexcept { return max - min; }
  bool degenerate() const noexcept { return !(max > min); }

  friend bool operator==(const AxisBounds&, const AxisBounds&) = default;
};

/// How the two variables share (or do not share) a scale when normalized.
enum class AxisScale {
  Independent,  // each variable fills [0,1] on its own padded range
  Shared,       // both variables use one common range, so spreads stay comparable
};

struct NormalizedDataSet {
  std::vector<Point2> points;  // in [0,1] x [0,1]
  AxisBounds bounds1;          // padded, data units
  AxisBounds bounds2;
  double padding = 0.0;
  AxisScale scale = AxisScale::Independent;
};

/// Maps [min - pad*range, max + pad*range] to [0,1] per axis. A zero-range
/// axis maps every value to 0.5.
///
/// Throws EmptyData when the data set is empty and InvalidArgument unless
/// 0 <= padding < 0.5.
NormalizedDataSet normalize(const DataSet& data, double padding = 0.05,
                            AxisScale scale = AxisScale::Independent);

/// Normalized coordinate of a data value on one axis.
double to_unit(const AxisBounds& b, double value) noexcept;
double from_unit(const AxisBounds& b, double unit) noexcept;

std::vector<Point2> denormalize(const NormalizedDataSet& n);

struct Viewport {
  double width = 0.0;
  double height = 0.0;

  friend bool operator==(const Viewport&, const Viewport&) = default;
};

struct Margins {
  double top = 0.0;
  double right = 0.0;
  double bottom = 0.0;
  double left = 0.0;
};

/// Rectangle in screen units, y downward.
struct Rect {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
};

inline constexpr double kDiamondAspect = 1.0;
inline constexpr double kScatterAspect = 1.61;

/// Largest rectangle of the orientation's aspect ratio centred in the area
/// left over by the margins. Throws InvalidViewport if that area is empty.
Rect drawing_area(Orientation o, Viewport viewport, const Margins& margins);

/// Normalized-to-screen map for an orientation.
///
///   Diamond:    (0,0) bottom vertex, (1,0) right, (1,1) top, (0,1) left,
///               inscribed in a square drawing area.
///   ScatterV1H: n1 rightward, n2 upward, 1.61:1 drawing area.
///   ScatterV2H: n2 rightward, n1 upward, 1.61:1 drawing area.
ViewTransform make_transform(Orientation o, Viewport viewport,
                             const Margins& margins);

}  // namespace diamondplot
