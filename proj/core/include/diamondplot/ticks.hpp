#pragma once

#include <vector>

namespace diamondplot {

/// A tick step written as mantissa x 10^exponent, mantissa in {1, 2, 2.5, 5}.
struct TickStep {
  double mantissa = 1.0;
  int exponent = 0;

  double value() const noexcept;
};

struct TickSet {
  TickStep step;
  std::vector<double> values;
};

/// Nice tick values inside [min, max].
///
/// Candidate steps are {1, 2, 2.5, 5} x 10^k. Each candidate yields the
/// multiples of the step lying in [min, max]. Counts within
/// [target/2, 2*target] are preferred, and among those counts of at least
/// three; the candidate closest to `target` then wins, ties to the finer
/// step. Values are computed as (integer x mantissa)
/// scaled by an exact power of ten so that labels print cleanly.
///
/// Throws InvalidRange when min >= max (or either bound is not finite) and
/// InvalidArgument when target < 2.
TickSet nice_ticks(double min, double max, int target);

std::vector<double> tick_positions(double min, double max, int target);

}  // namespace diamondplot
