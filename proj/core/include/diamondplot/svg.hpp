#pragma once

#include <string>

#include "diamondplot/scene.hpp"

namespace diamondplot {

struct PixelSize {
  double width = 0.0;
  double height = 0.0;
};

struct SvgDocument {
  std::string bytes;
  double width = 0.0;
  double height = 0.0;
};

/// SVG 1.1, UTF-8, LF line ends.
///
/// The scene viewport is scaled uniformly to fit the pixel size and centred;
/// the viewBox equals the pixel size. One element per primitive, in scene
/// order, styled through a fixed embedded class table. Every numeric
/// attribute has exactly three decimals, so output is byte-deterministic.
///
/// Throws InvalidArgument for a non-positive pixel size.
SvgDocument render(const Scene& scene, PixelSize pixels);

/// Renders at the scene's own viewport size.
SvgDocument render(const Scene& scene);

/// Text with &, <, >, " and ' replaced by entities.
std::string xml_escape(std::string_view text);

/// Three-decimal, round-half-even formatting used for every attribute.
std::string svg_number(double v);

}  // namespace diamondplot
