#include "diamondplot/bundle.hpp"

#include <cinttypes>
#include <cstdio>
#include <type_traits>

#include <json.hpp>

#include "diamondplot/error.hpp"
#include "format.hpp"

namespace diamondplot {

using json = nlohmann::ordered_json;

namespace {

double num(double v) { return detail::round_sig6(v); }

json optional_num(const std::optional<double>& v) {
  return v ? json(num(*v)) : json(nullptr);
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
  if (s.size() != 16) throw Error(ErrorCode::ParseError, "bad dataset_hash '" + s + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    v <<= 4;
    if (c >= '0' && c <= '9') v |= static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint64_t>(c - 'a' + 10);
    else throw Error(ErrorCode::ParseError, "bad dataset_hash '" + s + "'");
  }
  return v;
}

// --- encode ---------------------------------------------------------------

json dataset_to_json(const DataSet& d) {
  json values = json::array();
  for (const Point2& p : d.values) values.push_back({num(p.a1), num(p.a2)});
  return {{"label1", d.label1},
          {"label2", d.label2},
          {"source", d.source},
          {"values", std::move(values)}};
}

json fit_to_json(const std::optional<LineFit>& f) {
  if (!f) return nullptr;
  return {{"slope", num(f->slope)}, {"intercept", num(f->intercept)}};
}

json stats_to_json(const SummaryStats& s) {
  return {{"n", s.n},
          {"mean1", num(s.mean1)},
          {"mean2", num(s.mean2)},
          {"var1", num(s.var1)},
          {"var2", num(s.var2)},
          {"cov", num(s.cov)},
          {"pearson_r", optional_num(s.pearson_r)},
          {"ols", fit_to_json(s.ols)},
          {"deming_delta", num(s.deming_delta)},
          {"deming", fit_to_json(s.deming)}};
}

json transform_to_json(const ViewTransform& t) {
  // SVG matrix(a b c d e f) order.
  return json::array({num(t.xx), num(t.yx), num(t.xy), num(t.yy), num(t.tx), num(t.ty)});
}

json point_to_json(ScreenPoint p) { return json::array({num(p.x), num(p.y)}); }

json primitive_to_json(const Primitive& prim) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Line>) {
          return {{"type", "line"},
                  {"p", point_to_json(p.p)},
                  {"q", point_to_json(p.q)},
                  {"class", to_string(p.style)}};
        } else if constexpr (std::is_same_v<T, Circle>) {
          return {{"type", "circle"},
                  {"center", point_to_json(p.center)},
                  {"r", num(p.radius)},
                  {"class", to_string(p.style)}};
        } else {
          return {{"type", "text"},
                  {"anchor", point_to_json(p.anchor)},
                  {"text", p.text},
                  {"mode", to_string(p.mode)},
                  {"rotation", num(p.rotation)},
                  {"class", to_string(p.style)},
                  {"axis", p.axis}};
        }
      },
      prim);
}

json doubles_to_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(num(x));
  return out;
}

json scene_to_json(const Scene& s) {
  json prims = json::array();
  for (const Primitive& p : s.primitives) prims.push_back(primitive_to_json(p));
  return {{"orientation", to_string(s.orientation)},
          {"viewport", {{"width", num(s.viewport.width)}, {"height", num(s.viewport.height)}}},
          {"transform", transform_to_json(s.transform)},
          {"bounds1", {num(s.bounds1.min), num(s.bounds1.max)}},
          {"bounds2", {num(s.bounds2.min), num(s.bounds2.max)}},
          {"ticks1", doubles_to_json(s.ticks1)},
          {"ticks2", doubles_to_json(s.ticks2)},
          {"dataset_hash", hex64(s.dataset_hash)},
          {"primitives", std::move(prims)}};
}

// --- decode ---------------------------------------------------------------

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& name, const std::array<Enum, N>& all) {
  for (Enum e : all) {
    if (to_string(e) == name) return e;
  }
  throw Error(ErrorCode::ParseError, "unknown enum value '" + name + "'");
}

constexpr std::array<StyleClass, 5> kStyles = {StyleClass::Grid, StyleClass::Axis,
                                               StyleClass::Point, StyleClass::TickLabel,
                                               StyleClass::AxisTitle};
constexpr std::array<TextAnchor, 3> kAnchors = {TextAnchor::Start, TextAnchor::Middle,
                                                TextAnchor::End};

ScreenPoint point_from(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

std::optional<LineFit> fit_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return LineFit{j.at("slope").get<double>(), j.at("intercept").get<double>()};
}

DataSet dataset_from(const json& j) {
  DataSet d;
  d.label1 = j.at("label1").get<std::string>();
  d.label2 = j.at("label2").get<std::string>();
  d.source = j.at("source").get<std::string>();
  for (const json& v : j.at("values")) {
    d.values.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  }
  return d;
}

SummaryStats stats_from(const json& j) {
  SummaryStats s;
  s.n = j.at("n").get<std::size_t>();
  s.mean1 = j.at("mean1").get<double>();
  s.mean2 = j.at("mean2").get<double>();
  s.var1 = j.at("var1").get<double>();
  s.var2 = j.at("var2").get<double>();
  s.cov = j.at("cov").get<double>();
  if (!j.at("pearson_r").is_null()) s.pearson_r = j.at("pearson_r").get<double>();
  s.ols = fit_from(j.at("ols"));
  s.deming_delta = j.at("deming_delta").get<double>();
  s.deming = fit_from(j.at("deming"));
  return s;
}

ViewTransform transform_from(const json& j) {
  if (!j.is_array() || j.size() != 6) {
    throw Error(ErrorCode::ParseError, "transform must be an array of 6 numbers");
  }
  return {j[0].get<double>(), j[2].get<double>(), j[1].get<double>(),
          j[3].get<double>(), j[4].get<double>(), j[5].get<double>()};
}

Primitive primitive_from(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  const StyleClass style = enum_from(j.at("class").get<std::string>(), kStyles);
  if (type == "line") return Line{point_from(j.at("p")), point_from(j.at("q")), style};
  if (type == "circle") {
    return Circle{point_from(j.at("center")), j.at("r").get<double>(), style};
  }
  if (type == "text") {
    return Text{point_from(j.at("anchor")),        j.at("text").get<std::string>(),
                enum_from(j.at("mode").get<std::string>(), kAnchors),
                j.at("rotation").get<double>(),   style,
                j.at("axis").get<int>()};
  }
  throw Error(ErrorCode::ParseError, "unknown primitive type '" + type + "'");
}

std::vector<double> doubles_from(const json& j) {
  std::vector<double> out;
  for (const json& v : j) out.push_back(v.get<double>());
  return out;
}

Scene scene_from(const json& j) {
  Scene s;
  s.orientation = enum_from(j.at("orientation").get<std::string>(), kAllOrientations);
  s.viewport = {j.at("viewport").at("width").get<double>(),
                j.at("viewport").at("height").get<double>()};
  s.transform = transform_from(j.at("transform"));
  s.bounds1 = {j.at("bounds1").at(0).get<double>(), j.at("bounds1").at(1).get<double>()};
  s.bounds2 = {j.at("bounds2").at(0).get<double>(), j.at("bounds2").at(1).get<double>()};
  s.ticks1 = doubles_from(j.at("ticks1"));
  s.ticks2 = doubles_from(j.at("ticks2"));
  s.dataset_hash = parse_hex64(j.at("dataset_hash").get<std::string>());
  for (const json& p : j.at("primitives")) s.primitives.push_back(primitive_from(p));
  return s;
}

}  // namespace

std::uint64_t dataset_hash(const DataSet& data) {
  json canonical = dataset_to_json(data);
  canonical.erase("source");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SceneBundle scene_bundle(const DataSet& data, const SummaryStats& stats,
                         std::array<Scene, 3> scenes) {
  const std::uint64_t hash = dataset_hash(data);
  SceneBundle b;
  b.dataset = data;
  b.stats = stats;
  for (std::size_t i = 0; i < scenes.size(); ++i) {
    if (scenes[i].orientation != kAllOrientations[i]) {
      throw Error(ErrorCode::InconsistentBundle,
                  "scene " + std::to_string(i) + " should be " +
                      std::string(to_string(kAllOrientations[i])) + ", got " +
                      std::string(to_string(scenes[i].orientation)));
    }
    if (scenes[i].dataset_hash != hash) {
      throw Error(ErrorCode::InconsistentBundle,
                  "scene " + std::string(to_string(scenes[i].orientation)) +
                      " was built from a different dataset");
    }
    b.transforms[i] = scenes[i].transform;
  }
  if (stats.n != data.size()) {
    throw Error(ErrorCode::InconsistentBundle,
                "statistics cover " + std::to_string(stats.n) + " points, dataset has " +
                    std::to_string(data.size()));
  }
  b.scenes = std::move(scenes);
  return b;
}

SceneBundle make_bundle(const DataSet& data, const PlotConfig& base) {
  std::array<Scene, 3> scenes;
  for (std::size_t i = 0; i < kAllOrientations.size(); ++i) {
    PlotConfig cfg = PlotConfig::defaults(kAllOrientations[i]);
    cfg.title1 = base.title1;
    cfg.title2 = base.title2;
    cfg.grid = base.grid;
    cfg.tick_target = base.tick_target;
    cfg.point_radius = base.point_radius;
    cfg.padding = base.padding;
    cfg.axis_scale = base.axis_scale;
    scenes[i] = build_scene(data, cfg);
  }
  return scene_bundle(data, summary(data), std::move(scenes));
}

std::string serialize(const SceneBundle& b) {
  json scenes = json::array();
  json transforms = json::array();
  for (std::size_t i = 0; i < b.scenes.size(); ++i) {
    scenes.push_back(scene_to_json(b.scenes[i]));
    transforms.push_back({{"orientation", to_string(kAllOrientations[i])},
                          {"matrix", transform_to_json(b.transforms[i])}});
  }
  const json doc = {{"version", b.version},
                    {"dataset", dataset_to_json(b.dataset)},
                    {"stats", stats_to_json(b.stats)},
                    {"scenes", std::move(scenes)},
                    {"transforms", std::move(transforms)}};
  return doc.dump() + "\n";
}

SceneBundle parse_bundle(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bundle is not valid JSON: ") + e.what());
  }
  try {
    const int version = doc.at("version").get<int>();
    if (version != kBundleVersion) {
      throw Error(ErrorCode::UnsupportedVersion,
                  "bundle version " + std::to_string(version) + " is not supported (expected " +
                      std::to_string(kBundleVersion) + ")");
    }
    SceneBundle b;
    b.version = version;
    b.dataset = dataset_from(doc.at("dataset"));
    b.stats = stats_from(doc.at("stats"));
    const json& scenes = doc.at("scenes");
    const json& transforms = doc.at("transforms");
    if (scenes.size() != 3 || transforms.size() != 3) {
      throw Error(ErrorCode::ParseError, "bundle needs exactly 3 scenes and 3 transforms");
    }
    std::array<Scene, 3> parsed;
    for (std::size_t i = 0; i < 3; ++i) parsed[i] = scene_from(scenes[i]);
    SceneBundle checked = scene_bundle(b.dataset, b.stats, std::move(parsed));
    for (std::size_t i = 0; i < 3; ++i) {
      checked.transforms[i] = transform_from(transforms[i].at("matrix"));
    }
    return checked;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed bundle: ") + e.what());
  }
}

std::string stats_json(const SummaryStats& stats) { return stats_to_json(stats).dump(); }

}  // namespace diamondplot
