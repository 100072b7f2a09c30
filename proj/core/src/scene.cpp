#include "diamondplot/scene.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diamondplot/error.hpp"
#include "diamondplot/ticks.hpp"
#include "format.hpp"

namespace diamondplot {

std::string_view to_string(StyleClass c) noexcept {
  switch (c) {
    case StyleClass::Grid: return "grid";
    case StyleClass::Axis: return "axis";
    case StyleClass::Point: return "point";
    case StyleClass::TickLabel: return "tick-label";
    case StyleClass::AxisTitle: return "axis-title";
  }
  return "grid";
}

std::string_view to_string(TextAnchor a) noexcept {
  switch (a) {
    case TextAnchor::Start: return "start";
    case TextAnchor::Middle: return "middle";
    case TextAnchor::End: return "end";
  }
  return "start";
}

PlotConfig PlotConfig::defaults(Orientation o) {
  PlotConfig c;
  c.orientation = o;
  if (o != Orientation::Diamond) {
    c.viewport = {640.0, 396.0};
    c.margins = {32.0, 24.0, 56.0, 64.0};
  }
  return c;
}

namespace {

constexpr double kLabelOffset = 8.0;
constexpr double kTitleDrop = 44.0;
constexpr double kTitleGap = 8.0;
constexpr double kVerticalTitleRise = 12.0;
constexpr double kHorizontalTitleDrop = 40.0;

std::vector<double> axis_ticks(const AxisBounds& b, int target) {
  if (b.degenerate()) return {b.min};
  return tick_positions(b.min, b.max, target);
}

ScreenPoint unit(ScreenPoint v) {
  const double len = std::hypot(v.x, v.y);
  return {v.x / len, v.y / len};
}

// Screen direction pointing away from the plot, perpendicular to the axis
// whose image is `along`, given the image `across` of the other unit axis.
ScreenPoint outward(ScreenPoint along, ScreenPoint across) {
  const double k = (across.x * along.x + across.y * along.y) /
                   (along.x * along.x + along.y * along.y);
  const ScreenPoint perp{across.x - k * along.x, across.y - k * along.y};
  const ScreenPoint u = unit(perp);
  return {-u.x, -u.y};
}

TextAnchor anchor_for(ScreenPoint dir) {
  if (dir.x > 0.3) return TextAnchor::Start;
  if (dir.x < -0.3) return TextAnchor::End;
  return TextAnchor::Middle;
}

ScreenPoint clamp_to(ScreenPoint p, Viewport v) {
  return {std::clamp(p.x, 0.0, v.width), std::clamp(p.y, 0.0, v.height)};
}

void validate(const PlotConfig& c) {
  if (c.tick_target < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "tick target must be at least 2, got " +
                    std::to_string(c.tick_target));
  }
  if (!(c.point_radius > 0.0) || !std::isfinite(c.point_radius)) {
    throw Error(ErrorCode::InvalidArgument, "point radius must be positive");
  }
}

}  // namespace

Scene build_scene(const DataSet& data, const PlotConfig& config) {
  diamondplot::validate(data);
  validate(config);
  const NormalizedDataSet norm =
      normalize(data, config.padding, config.axis_scale);

  Scene scene;
  scene.orientation = config.orientation;
  scene.viewport = config.viewport;
  scene.transform =
      make_transform(config.orientation, config.viewport, config.margins);
  scene.bounds1 = norm.bounds1;
  scene.bounds2 = norm.bounds2;
  scene.ticks1 = axis_ticks(norm.bounds1, config.tick_target);
  scene.ticks2 = axis_ticks(norm.bounds2, config.tick_target);
  scene.dataset_hash = dataset_hash(data);

  const ViewTransform& t = scene.transform;
  auto at = [&t](double n1, double n2) { return to_screen(t, {n1, n2}); };
  auto& prims = scene.primitives;

  if (config.grid) {
    for (double v : scene.ticks1) {
      const double u = to_unit(norm.bounds1, v);
      prims.emplace_back(Line{at(u, 0.0), at(u, 1.0), StyleClass::Grid});
    }
    for (double v : scene.ticks2) {
      const double u = to_unit(norm.bounds2, v);
      prims.emplace_back(Line{at(0.0, u), at(1.0, u), StyleClass::Grid});
    }
  }

  const ScreenPoint origin = at(0.0, 0.0);
  prims.emplace_back(Line{origin, at(1.0, 0.0), StyleClass::Axis});
  prims.emplace_back(Line{origin, at(0.0, 1.0), StyleClass::Axis});

  for (const Point2& p : norm.points) {
    prims.emplace_back(Circle{at(p.a1, p.a2), config.point_radius, StyleClass::Point});
  }

  const ScreenPoint dir1{t.xx, t.yx};  // image of the variable-1 direction
  const ScreenPoint dir2{t.xy, t.yy};
  const ScreenPoint out1 = outward(dir1, dir2);
  const ScreenPoint out2 = outward(dir2, dir1);

  auto add_labels = [&](const std::vector<double>& ticks, const AxisBounds& b,
                        ScreenPoint out, int axis) {
    const double drop = 4.0 + 7.0 * std::max(0.0, out.y);
    for (double v : ticks) {
      const double u = to_unit(b, v);
      const ScreenPoint base = axis == 1 ? at(u, 0.0) : at(0.0, u);
      const ScreenPoint pos{base.x + out.x * kLabelOffset,
                            base.y + out.y * kLabelOffset + drop};
      prims.emplace_back(Text{clamp_to(pos, config.viewport),
                              detail::format_shortest(v), anchor_for(out), 0.0,
                              StyleClass::TickLabel, axis});
    }
  };
  add_labels(scene.ticks1, norm.bounds1, out1, 1);
  add_labels(scene.ticks2, norm.bounds2, out2, 2);

  const std::string& title1 = config.title1.empty() ? data.label1 : config.title1;
  const std::string& title2 = config.title2.empty() ? data.label2 : config.title2;
  auto add_title = [&](ScreenPoint pos, const std::string& text, TextAnchor mode,
                       int axis) {
    prims.emplace_back(Text{clamp_to(pos, config.viewport), text, mode, 0.0,
                            StyleClass::AxisTitle, axis});
  };

  if (config.orientation == Orientation::Diamond) {
    const double baseline = origin.y + kTitleDrop;
    add_title({origin.x + kTitleGap, baseline}, title1, TextAnchor::Start, 1);
    add_title({origin.x - kTitleGap, baseline}, title2, TextAnchor::End, 2);
  } else {
    const Rect area =
        drawing_area(config.orientation, config.viewport, config.margins);
    const bool swapped = config.orientation == Orientation::ScatterV2H;
    const ScreenPoint below{area.x + area.width / 2.0,
                            area.y + area.height + kHorizontalTitleDrop};
    const ScreenPoint above{area.x, area.y - kVerticalTitleRise};
    if (!swapped) {
      add_title(below, title1, TextAnchor::Middle, 1);
      add_title(above, title2, TextAnchor::Start, 2);
    } else {
      add_title(above, title1, TextAnchor::Start, 1);
      add_title(below, title2, TextAnchor::Middle, 2);
    }
  }
  return scene;
}

}  // namespace diamondplot
