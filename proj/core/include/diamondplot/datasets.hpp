#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "diamondplot/dataset.hpp"
#include "diamondplot/random.hpp"

namespace diamondplot {

/// "anscombe1" .. "anscombe4".
std::span<const std::string_view> builtin_names() noexcept;

/// Anscombe's quartet (Anscombe 1973), 11 points per set. Throws
/// UnknownDataset listing the valid names.
DataSet builtin(std::string_view name);

/// Parameters of one bivariate-normal demo panel (zero means).
struct NormalPanel {
  std::string_view name;
  std::string_view description;
  double sd1;
  double sd2;
  double rho;
};

/// "fig5a" .. "fig5e": uncorrelated with either variable wider, rho = 0.75
/// with either variable wider, and rho = -0.75 with equal spreads.
std::span<const NormalPanel> normal_panels() noexcept;

/// Throws UnknownDataset for names outside normal_panels().
const NormalPanel& normal_panel(std::string_view name);

BivariateNormalSpec panel_spec(const NormalPanel& panel, std::size_t n,
                               std::uint64_t seed);

}  // namespace diamondplot
