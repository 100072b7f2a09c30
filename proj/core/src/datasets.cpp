#include "diamondplot/datasets.hpp"

#include <array>
#include <string>

#include "diamondplot/error.hpp"

namespace diamondplot {

namespace {

constexpr std::array<std::string_view, 4> kBuiltinNames = {
    "anscombe1", "anscombe2", "anscombe3", "anscombe4"};

constexpr std::array<double, 11> kX123 = {10, 8, 13, 9, 11, 14, 6, 4, 12, 7, 5};
constexpr std::array<double, 11> kX4 = {8, 8, 8, 8, 8, 8, 8, 19, 8, 8, 8};

constexpr std::array<std::array<double, 11>, 4> kY = {{
    {8.04, 6.95, 7.58, 8.81, 8.33, 9.96, 7.24, 4.26, 10.84, 4.82, 5.68},
    {9.14, 8.14, 8.74, 8.77, 9.26, 8.10, 6.13, 3.10, 9.13, 7.26, 4.74},
    {7.46, 6.77, 12.74, 7.11, 7.81, 8.84, 6.08, 5.39, 8.15, 6.42, 5.73},
    {6.58, 5.76, 7.71, 8.84, 8.47, 7.04, 5.25, 12.50, 5.56, 7.91, 6.89},
}};

constexpr std::array<NormalPanel, 5> kPanels = {{
    {"fig5a", "uncorrelated, variable 1 has higher variance", 1.5, 1.0, 0.0},
    {"fig5b", "uncorrelated, variable 2 has higher variance", 1.0, 1.5, 0.0},
    {"fig5c", "rho = 0.75, variable 1 has higher variance", 1.5, 1.0, 0.75},
    {"fig5d", "rho = 0.75, variable 2 has higher variance", 1.0, 1.5, 0.75},
    {"fig5e", "rho = -0.75, equal variances", 1.0, 1.0, -0.75},
}};

template <typename Names>
std::string join(const Names& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

std::span<const std::string_view> builtin_names() noexcept { return kBuiltinNames; }

DataSet builtin(std::string_view name) {
  for (std::size_t set = 0; set < kBuiltinNames.size(); ++set) {
    if (kBuiltinNames[set] != name) continue;
    const auto& xs = set == 3 ? kX4 : kX123;
    const std::string index = std::to_string(set + 1);
    DataSet out{"x" + index, "y" + index, {}, "builtin:" + std::string(name)};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out.values.push_back({xs[i], kY[set][i]});
    }
    return out;
  }
  throw Error(ErrorCode::UnknownDataset, "unknown dataset '" + std::string(name) +
                                             "' (valid: " + join(kBuiltinNames) +
                                             ")");
}

std::span<const NormalPanel> normal_panels() noexcept { return kPanels; }

const NormalPanel& normal_panel(std::string_view name) {
  for (const NormalPanel& p : kPanels) {
    if (p.name == name) return p;
  }
  std::array<std::string_view, kPanels.size()> names{};
  for (std::size_t i = 0; i < kPanels.size(); ++i) names[i] = kPanels[i].name;
  throw Error(ErrorCode::UnknownDataset, "unknown panel '" + std::string(name) +
                                             "' (valid: " + join(names) + ")");
}

BivariateNormalSpec panel_spec(const NormalPanel& panel, std::size_t n,
                               std::uint64_t seed) {
  return {0.0, 0.0, panel.sd1, panel.sd2, panel.rho, n, seed};
}

}  // namespace diamondplot
