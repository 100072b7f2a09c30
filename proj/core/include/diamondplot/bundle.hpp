#pragma once

#include <array>
#include <string>
#include <string_view>

#include "diamondplot/dataset.hpp"
#include "diamondplot/scene.hpp"
#include "diamondplot/stats.hpp"

namespace diamondplot {

inline constexpr int kBundleVersion = 1;

/// Everything the interactive viewer needs: the data, its statistics, and
/// the three laid-out views with their transforms. Scenes and transforms
/// are indexed in kAllOrientations order (diamond, scatter, scatter-swapped).
struct SceneBundle {
  int version = kBundleVersion;
  DataSet dataset;
  SummaryStats stats;
  std::array<Scene, 3> scenes;
  std::array<ViewTransform, 3> transforms;
};

/// Throws InconsistentBundle when a scene was built from a different data
/// set, or the scenes are not in diamond / scatter / scatter-swapped order.
SceneBundle scene_bundle(const DataSet& data, const SummaryStats& stats,
                         std::array<Scene, 3> scenes);

/// Builds all three scenes with PlotConfig::defaults per orientation, the
/// given titles and grid flag, then bundles them.
SceneBundle make_bundle(const DataSet& data, const PlotConfig& base);

/// Versioned JSON document {version, dataset, stats, scenes, transforms}.
/// Field order is fixed and numbers carry at most 6 significant digits, so
/// serialize(parse(serialize(b))) == serialize(b) byte for byte.
std::string serialize(const SceneBundle& bundle);

/// Throws ParseError on malformed JSON, UnsupportedVersion for a version
/// other than kBundleVersion and InconsistentBundle when the scene hashes
/// do not match the embedded data set.
SceneBundle parse_bundle(std::string_view json);

/// One-line JSON object with the statistics, same number format as bundles.
std::string stats_json(const SummaryStats& stats);

}  // namespace diamondplot
