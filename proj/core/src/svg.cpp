#include "diamondplot/svg.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "diamondplot/error.hpp"
#include "format.hpp"

namespace diamondplot {

namespace {

constexpr std::string_view kStyle =
    "<style type=\"text/css\"><![CDATA[\n"
    ".grid{stroke:#cccccc;stroke-width:0.75;fill:none}\n"
    ".axis{stroke:#333333;stroke-width:1.25;fill:none}\n"
    ".point{fill:#1f5fa8;fill-opacity:0.7;stroke:none}\n"
    ".tick-label{font-family:Helvetica,Arial,sans-serif;font-size:11px;fill:#333333}\n"
    ".axis-title{font-family:Helvetica,Arial,sans-serif;font-size:13px;fill:#111111}\n"
    "]]></style>\n";

struct Placement {
  double scale = 1.0;
  double dx = 0.0;
  double dy = 0.0;

  double x(double v) const { return dx + scale * v; }
  double y(double v) const { return dy + scale * v; }
  double len(double v) const { return scale * v; }
};

void attr(std::string& out, std::string_view name, double value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += svg_number(value);
  out += '"';
}

void attr(std::string& out, std::string_view name, std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += xml_escape(value);
  out += '"';
}

void emit(std::string& out, const Line& l, const Placement& at) {
  out += "<line";
  attr(out, "x1", at.x(l.p.x));
  attr(out, "y1", at.y(l.p.y));
  attr(out, "x2", at.x(l.q.x));
  attr(out, "y2", at.y(l.q.y));
  attr(out, "class", to_string(l.style));
  out += "/>\n";
}

void emit(std::string& out, const Circle& c, const Placement& at) {
  out += "<circle";
  attr(out, "cx", at.x(c.center.x));
  attr(out, "cy", at.y(c.center.y));
  attr(out, "r", at.len(c.radius));
  attr(out, "class", to_string(c.style));
  out += "/>\n";
}

void emit(std::string& out, const Text& t, const Placement& at) {
  const double x = at.x(t.anchor.x);
  const double y = at.y(t.anchor.y);
  out += "<text";
  attr(out, "x", x);
  attr(out, "y", y);
  attr(out, "text-anchor", to_string(t.mode));
  attr(out, "class", to_string(t.style));
  if (t.rotation != 0.0) {
    out += " transform=\"rotate(" + svg_number(t.rotation) + " " + svg_number(x) +
           " " + svg_number(y) + ")\"";
  }
  out += '>';
  out += xml_escape(t.text);
  out += "</text>\n";
}

}  // namespace

std::string svg_number(double v) { return detail::format_fixed3(v); }

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c; break;
    }
  }
  return out;
}

SvgDocument render(const Scene& scene, PixelSize px) {
  if (!(px.width > 0.0) || !(px.height > 0.0) || !std::isfinite(px.width) ||
      !std::isfinite(px.height)) {
    throw Error(ErrorCode::InvalidArgument, "pixel size must be positive");
  }
  Placement at;
  if (scene.viewport.width > 0.0 && scene.viewport.height > 0.0) {
    at.scale = std::min(px.width / scene.viewport.width,
                        px.height / scene.viewport.height);
    at.dx = (px.width - at.scale * scene.viewport.width) / 2.0;
    at.dy = (px.height - at.scale * scene.viewport.height) / 2.0;
  }

  SvgDocument doc;
  doc.width = px.width;
  doc.height = px.height;
  std::string& out = doc.bytes;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  attr(out, "width", px.width);
  attr(out, "height", px.height);
  out += " viewBox=\"0.000 0.000 " + svg_number(px.width) + " " +
         svg_number(px.height) + "\">\n";
  out += kStyle;
  for (const Primitive& p : scene.primitives) {
    std::visit([&](const auto& prim) { emit(out, prim, at); }, p);
  }
  out += "</svg>\n";
  return doc;
}

SvgDocument render(const Scene& scene) {
  return render(scene, {scene.viewport.width, scene.viewport.height});
}

}  // namespace diamondplot
