#pragma once

#include <string>

namespace diamondplot::detail {

/// Shortest decimal that parses back to the same double. -0 prints as "0".
std::string format_shortest(double v);

/// Exactly three decimals, correctly rounded from the binary value (exact
/// ties go to even). Never prints "-0.000".
std::string format_fixed3(double v);

/// Nearest double to `v` printed with 6 significant digits.
double round_sig6(double v);

}  // namespace diamondplot::detail
