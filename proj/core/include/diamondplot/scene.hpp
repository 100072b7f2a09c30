#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "diamondplot/dataset.hpp"
#include "diamondplot/geometry.hpp"

namespace diamondplot {

/// Screen-space position, y downward.
struct ScreenPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const ScreenPoint&, const ScreenPoint&) = default;
};

inline ScreenPoint to_screen(const ViewTransform& t, Point2 p) noexcept {
  const Point2 s = apply(t, p);
  return {s.a1, s.a2};
}

enum class StyleClass { Grid, Axis, Point, TickLabel, AxisTitle };

std::string_view to_string(StyleClass c) noexcept;

enum class TextAnchor { Start, Middle, End };

std::string_view to_string(TextAnchor a) noexcept;

struct Line {
  ScreenPoint p;
  ScreenPoint q;
  StyleClass style = StyleClass::Grid;

  friend bool operator==(const Line&, const Line&) = default;
};

struct Circle {
  ScreenPoint center;
  double radius = 0.0;
  StyleClass style = StyleClass::Point;

  friend bool operator==(const Circle&, const Circle&) = default;
};

struct Text {
  ScreenPoint anchor;
  std::string text;
  TextAnchor mode = TextAnchor::Start;
  double rotation = 0.0;  // degrees
  StyleClass style = StyleClass::TickLabel;
  int axis = 0;           // 1 or 2 for tick labels and titles, 0 otherwise

  friend bool operator==(const Text&, const Text&) = default;
};

using Primitive = std::variant<Line, Circle, Text>;

struct PlotConfig {
  Orientation orientation = Orientation::Diamond;
  Viewport viewport{640.0, 640.0};
  Margins margins{24.0, 48.0, 72.0, 48.0};
  std::string title1;  // empty: the dataset's label
  std::string title2;
  bool grid = true;
  int tick_target = 5;
  double point_radius = 3.0;
  double padding = 0.05;
  AxisScale axis_scale = AxisScale::Independent;

  /// 640x640 for the diamond, 640x396 (about 1.61:1) for the scatter views,
  /// with margins sized for the labels each layout places.
  static PlotConfig defaults(Orientation o);
};

/// Resolution-independent drawing list plus the data needed to interpret it.
struct Scene {
  Orientation orientation = Orientation::Diamond;
  Viewport viewport;
  ViewTransform transform;
  AxisBounds bounds1;
  AxisBounds bounds2;
  std::vector<double> ticks1;
  std::vector<double> ticks2;
  std::uint64_t dataset_hash = 0;
  std::vector<Primitive> primitives;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Lays out a data set.
///
/// Order of primitives: gridlines for variable 1 then variable 2 (when
/// enabled), the two axis lines, one circle per point in data order, tick
/// labels for variable 1 then variable 2, and the two axis titles.
///
/// Gridlines run edge to edge across the plotting region. Axis lines are
/// the images of the unit-square edges through the origin, which for the
/// diamond are its lower-left (variable 2) and lower-right (variable 1)
/// edges. Tick labels sit just outside their axis, offset perpendicular to
/// it. Titles and labels are never rotated. In the diamond both titles
/// share one baseline under the bottom vertex, variable 1 to the right.
///
/// Throws EmptyData, and InvalidArgument / InvalidViewport for a bad config.
Scene build_scene(const DataSet& data, const PlotConfig& config);

}  // namespace diamondplot
