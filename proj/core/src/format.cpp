#include "format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string_view>

namespace diamondplot::detail {

std::string format_shortest(double v) {
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), r.ptr);
}

std::string format_fixed3(double v) {
  std::array<char, 400> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                               std::chars_format::fixed, 3);
  std::string_view text(buf.data(), static_cast<std::size_t>(r.ptr - buf.data()));
  if (text == "-0.000") return "0.000";
  return std::string(text);
}

double round_sig6(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                               std::chars_format::general, 6);
  double out = 0.0;
  std::from_chars(buf.data(), r.ptr, out);
  return out;
}

}  // namespace diamondplot::detail
