#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <random>

#include "diamondplot/datasets.hpp"
#include "diamondplot/error.hpp"
#include "diamondplot/scene.hpp"

namespace diamondplot {
namespace {

template <class T>
std::vector<T> all_of_type(const Scene& s) {
  std::vector<T> out;
  for (const Primitive& p : s.primitives) {
    if (const T* t = std::get_if<T>(&p)) out.push_back(*t);
  }
  return out;
}

std::vector<Line> lines_with(const Scene& s, StyleClass c) {
  std::vector<Line> out;
  for (const Line& l : all_of_type<Line>(s)) {
    if (l.style == c) out.push_back(l);
  }
  return out;
}

std::vector<Text> texts_with(const Scene& s, StyleClass c, int axis) {
  std::vector<Text> out;
  for (const Text& t : all_of_type<Text>(s)) {
    if (t.style == c && t.axis == axis) out.push_back(t);
  }
  return out;
}

DataSet random_data(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(0, 1);
  std::uniform_real_distribution<double> scale(0.01, 1000);
  const double k1 = scale(rng), k2 = scale(rng);
  DataSet d{"alpha", "beta", {}, "random"};
  for (int i = 0; i < n; ++i) d.values.push_back({k1 * z(rng), k2 * z(rng) + 5});
  return d;
}

TEST(BuildScene, DiamondPrimitiveCounts) {
  const DataSet d = builtin("anscombe1");
  const Scene s = build_scene(d, PlotConfig::defaults(Orientation::Diamond));
  EXPECT_EQ(all_of_type<Circle>(s).size(), 11u);
  EXPECT_EQ(lines_with(s, StyleClass::Axis).size(), 2u);
  EXPECT_EQ(lines_with(s, StyleClass::Grid).size(), s.ticks1.size() + s.ticks2.size());
  EXPECT_EQ(texts_with(s, StyleClass::TickLabel, 1).size(), s.ticks1.size());
  EXPECT_EQ(texts_with(s, StyleClass::TickLabel, 2).size(), s.ticks2.size());
  EXPECT_EQ(texts_with(s, StyleClass::AxisTitle, 1).size(), 1u);
  EXPECT_EQ(texts_with(s, StyleClass::AxisTitle, 2).size(), 1u);
  EXPECT_EQ(s.dataset_hash, dataset_hash(d));
}

TEST(BuildScene, PrimitiveOrder) {
  const Scene s = build_scene(builtin("anscombe2"), PlotConfig::defaults(Orientation::Diamond));
  const std::size_t grid = s.ticks1.size() + s.ticks2.size();
  for (std::size_t i = 0; i < s.primitives.size(); ++i) {
    const Primitive& p = s.primitives[i];
    if (i < grid) {
      EXPECT_EQ(std::get<Line>(p).style, StyleClass::Grid);
    } else if (i < grid + 2) {
      EXPECT_EQ(std::get<Line>(p).style, StyleClass::Axis);
    } else if (i < grid + 2 + 11) {
      EXPECT_TRUE(std::holds_alternative<Circle>(p));
    } else if (i < s.primitives.size() - 2) {
      EXPECT_EQ(std::get<Text>(p).style, StyleClass::TickLabel);
    } else {
      EXPECT_EQ(std::get<Text>(p).style, StyleClass::AxisTitle);
    }
  }
}

TEST(BuildScene, DiamondGridlinesAreDiagonal) {
  const Scene s = build_scene(builtin("anscombe1"), PlotConfig::defaults(Orientation::Diamond));
  const auto grid = lines_with(s, StyleClass::Grid);
  ASSERT_GE(grid.size(), 6u);
  for (const Line& l : grid) {
    const double dx = l.q.x - l.p.x, dy = l.q.y - l.p.y;
    EXPECT_NEAR(std::abs(dx), std::abs(dy), 1e-9);
    EXPECT_GT(std::abs(dx), 1.0);
  }
  for (const Line& l : lines_with(s, StyleClass::Axis)) {
    EXPECT_NEAR(std::abs(l.q.x - l.p.x), std::abs(l.q.y - l.p.y), 1e-9);
  }
}

TEST(BuildScene, ScatterGridlinesAreAxisAligned) {
  for (Orientation o : {Orientation::ScatterV1H, Orientation::ScatterV2H}) {
    const Scene s = build_scene(builtin("anscombe3"), PlotConfig::defaults(o));
    for (const Line& l : all_of_type<Line>(s)) {
      EXPECT_TRUE(l.p.x == l.q.x || l.p.y == l.q.y);
    }
  }
}

TEST(BuildScene, NoGridOption) {
  PlotConfig c = PlotConfig::defaults(Orientation::Diamond);
  c.grid = false;
  const Scene s = build_scene(builtin("anscombe1"), c);
  EXPECT_TRUE(lines_with(s, StyleClass::Grid).empty());
  EXPECT_EQ(lines_with(s, StyleClass::Axis).size(), 2u);
}

TEST(BuildScene, DiamondOriginIsBottomVertex) {
  const Scene s = build_scene(builtin("anscombe1"), PlotConfig::defaults(Orientation::Diamond));
  const auto axes = lines_with(s, StyleClass::Axis);
  const ScreenPoint origin = axes[0].p;
  for (const Line& l : all_of_type<Line>(s)) {
    EXPECT_LE(l.p.y, origin.y + 1e-9);
    EXPECT_LE(l.q.y, origin.y + 1e-9);
  }
  // Variable 1 runs up to the right, variable 2 up to the left.
  EXPECT_GT(axes[0].q.x, origin.x);
  EXPECT_LT(axes[0].q.y, origin.y);
  EXPECT_LT(axes[1].q.x, origin.x);
  EXPECT_LT(axes[1].q.y, origin.y);
}

TEST(BuildScene, LowestPointHasSmallestSum) {
  const DataSet d = random_data(4, 200);
  const Scene s = build_scene(d, PlotConfig::defaults(Orientation::Diamond));
  const NormalizedDataSet n = normalize(d);
  const auto circles = all_of_type<Circle>(s);
  std::size_t lowest = 0, smallest = 0;
  for (std::size_t i = 1; i < circles.size(); ++i) {
    if (circles[i].center.y > circles[lowest].center.y) lowest = i;
    if (n.points[i].a1 + n.points[i].a2 < n.points[smallest].a1 + n.points[smallest].a2) {
      smallest = i;
    }
  }
  EXPECT_EQ(lowest, smallest);
}

TEST(BuildScene, DiamondPreservesNormalizedDistances) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DataSet d = random_data(seed, 50);
    const Scene s = build_scene(d, PlotConfig::defaults(Orientation::Diamond));
    const NormalizedDataSet n = normalize(d);
    const auto circles = all_of_type<Circle>(s);
    const double side = std::hypot(s.transform.xx, s.transform.yx);
    for (std::size_t i = 1; i < circles.size(); ++i) {
      const double screen = std::hypot(circles[i].center.x - circles[0].center.x,
                                       circles[i].center.y - circles[0].center.y);
      const double unit = std::hypot(n.points[i].a1 - n.points[0].a1,
                                     n.points[i].a2 - n.points[0].a2);
      EXPECT_NEAR(screen, side * unit, 1e-9 * side);
    }
  }
}

TEST(BuildScene, InverseTransformRecoversData) {
  for (Orientation o : kAllOrientations) {
    const DataSet d = random_data(31, 100);
    const Scene s = build_scene(d, PlotConfig::defaults(o));
    const ViewTransform inv = invert(s.transform);
    const auto circles = all_of_type<Circle>(s);
    NormalizedDataSet n = normalize(d);
    for (std::size_t i = 0; i < circles.size(); ++i) {
      const Point2 u = apply(inv, {circles[i].center.x, circles[i].center.y});
      const double a1 = from_unit(s.bounds1, u.a1);
      const double a2 = from_unit(s.bounds2, u.a2);
      EXPECT_NEAR(a1, d.values[i].a1, 1e-9 * s.bounds1.range());
      EXPECT_NEAR(a2, d.values[i].a2, 1e-9 * s.bounds2.range());
    }
  }
}

TEST(BuildScene, TickLabelsParseBackToTicks) {
  for (Orientation o : kAllOrientations) {
    const Scene s = build_scene(random_data(12, 30), PlotConfig::defaults(o));
    for (int axis : {1, 2}) {
      const auto labels = texts_with(s, StyleClass::TickLabel, axis);
      const auto& ticks = axis == 1 ? s.ticks1 : s.ticks2;
      ASSERT_EQ(labels.size(), ticks.size());
      for (std::size_t i = 0; i < ticks.size(); ++i) {
        double v = 0;
        const auto& t = labels[i].text;
        ASSERT_EQ(std::from_chars(t.data(), t.data() + t.size(), v).ec, std::errc{}) << t;
        EXPECT_EQ(v, ticks[i]);
      }
    }
  }
}

TEST(BuildScene, TextIsUnrotatedAndInsideViewport) {
  for (Orientation o : kAllOrientations) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Scene s = build_scene(random_data(seed, 20), PlotConfig::defaults(o));
      for (const Text& t : all_of_type<Text>(s)) {
        EXPECT_EQ(t.rotation, 0.0);
        EXPECT_GE(t.anchor.x, 0.0);
        EXPECT_LE(t.anchor.x, s.viewport.width);
        EXPECT_GE(t.anchor.y, 0.0);
        EXPECT_LE(t.anchor.y, s.viewport.height);
      }
      for (const Circle& c : all_of_type<Circle>(s)) {
        EXPECT_GE(c.center.x, 0.0);
        EXPECT_LE(c.center.x, s.viewport.width);
        EXPECT_GE(c.center.y, 0.0);
        EXPECT_LE(c.center.y, s.viewport.height);
      }
    }
  }
}

TEST(BuildScene, DiamondTitlesShareBaselineBelowOrigin) {
  PlotConfig c = PlotConfig::defaults(Orientation::Diamond);
  c.title1 = "Height";
  const Scene s = build_scene(builtin("anscombe1"), c);
  const Text t1 = texts_with(s, StyleClass::AxisTitle, 1).at(0);
  const Text t2 = texts_with(s, StyleClass::AxisTitle, 2).at(0);
  const ScreenPoint origin = lines_with(s, StyleClass::Axis)[0].p;
  EXPECT_EQ(t1.text, "Height");
  EXPECT_EQ(t2.text, "y1");
  EXPECT_EQ(t1.anchor.y, t2.anchor.y);
  EXPECT_GT(t1.anchor.y, origin.y);
  EXPECT_GT(t1.anchor.x, origin.x);
  EXPECT_LT(t2.anchor.x, origin.x);
  EXPECT_EQ(t1.mode, TextAnchor::Start);
  EXPECT_EQ(t2.mode, TextAnchor::End);
}

TEST(BuildScene, SwappedScatterMirrorsAxes) {
  const DataSet d = builtin("anscombe1");
  const Scene v1h = build_scene(d, PlotConfig::defaults(Orientation::ScatterV1H));
  const Scene v2h = build_scene(d, PlotConfig::defaults(Orientation::ScatterV2H));
  const auto a = all_of_type<Circle>(v1h);
  const auto b = all_of_type<Circle>(v2h);
  const double w = v1h.transform.xx, h = -v1h.transform.yy;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // Normalized coordinates of each view must be each other's swap.
    const Point2 ua = apply(invert(v1h.transform), {a[i].center.x, a[i].center.y});
    const Point2 ub = apply(invert(v2h.transform), {b[i].center.x, b[i].center.y});
    EXPECT_NEAR(ua.a1, ub.a1, 1e-12);
    EXPECT_NEAR(ua.a2, ub.a2, 1e-12);
    EXPECT_NEAR(b[i].center.x - v2h.transform.tx, w * ua.a2, 1e-9);
    EXPECT_NEAR(v2h.transform.ty - b[i].center.y, h * ua.a1, 1e-9);
  }
  EXPECT_EQ(texts_with(v2h, StyleClass::AxisTitle, 1)[0].anchor,
            texts_with(v1h, StyleClass::AxisTitle, 2)[0].anchor);
}

TEST(BuildScene, DegenerateAxisGetsOneTick) {
  const DataSet d{"x", "y", {{1, 5}, {2, 5}, {3, 5}}, "t"};
  const Scene s = build_scene(d, PlotConfig::defaults(Orientation::Diamond));
  EXPECT_EQ(s.ticks2, (std::vector<double>{5}));
  EXPECT_GE(s.ticks1.size(), 3u);
}

TEST(BuildScene, SinglePoint) {
  const DataSet d{"x", "y", {{1, 5}}, "t"};
  const Scene s = build_scene(d, PlotConfig::defaults(Orientation::Diamond));
  const auto circles = all_of_type<Circle>(s);
  ASSERT_EQ(circles.size(), 1u);
  const ScreenPoint centre = to_screen(s.transform, {0.5, 0.5});
  EXPECT_NEAR(circles[0].center.x, centre.x, 1e-12);
  EXPECT_NEAR(circles[0].center.y, centre.y, 1e-12);
}

TEST(BuildScene, Errors) {
  const auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  PlotConfig c = PlotConfig::defaults(Orientation::Diamond);
  EXPECT_EQ(code([&] { build_scene(DataSet{"x", "y", {}, ""}, c); }), ErrorCode::EmptyData);
  c.tick_target = 1;
  EXPECT_EQ(code([&] { build_scene(builtin("anscombe1"), c); }), ErrorCode::InvalidArgument);
  c = PlotConfig::defaults(Orientation::Diamond);
  c.viewport = {50, 50};
  EXPECT_EQ(code([&] { build_scene(builtin("anscombe1"), c); }), ErrorCode::InvalidViewport);
}

TEST(BuildScene, Deterministic) {
  const DataSet d = random_data(8, 300);
  for (Orientation o : kAllOrientations) {
    EXPECT_EQ(build_scene(d, PlotConfig::defaults(o)), build_scene(d, PlotConfig::defaults(o)));
  }
}

}  // namespace
}  // namespace diamondplot
