#include "diamondplot/ticks.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "diamondplot/error.hpp"

namespace diamondplot {

namespace {

constexpr std::array<double, 4> kMantissas = {1.0, 2.0, 2.5, 5.0};
constexpr int kMinTicks = 3;

// Lower is better: counts inside [target/2, 2*target] with at least
// kMinTicks, then any count inside that window, then anything non-empty.
int tier(long long count, int target) {
  const bool in_window = 2 * count >= target && count <= 2LL * target;
  if (in_window && count >= kMinTicks) return 0;
  if (in_window) return 1;
  return 2;
}

// Exact for |k| <= 22, which covers every double range we can label.
double pow10(int k) {
  double p = 1.0;
  for (int i = 0; i < std::abs(k); ++i) p *= 10.0;
  return p;
}

double scaled(double units, int exponent) {
  return exponent >= 0 ? units * pow10(exponent) : units / pow10(-exponent);
}

// Multiples i of the step with min <= i*step <= max, as [first, last].
struct Span {
  long long first = 0;
  long long last = -1;
  long long count() const { return last - first + 1; }
};

Span multiples_inside(double min, double max, const TickStep& step) {
  const double s = step.value();
  // Relative slack so that bounds sitting exactly on a multiple are kept
  // despite rounding in min/s.
  const double eps = 1e-9;
  Span span;
  span.first = static_cast<long long>(std::ceil(min / s - eps));
  span.last = static_cast<long long>(std::floor(max / s + eps));
  return span;
}

}  // namespace

double TickStep::value() const noexcept { return scaled(mantissa, exponent); }

TickSet nice_ticks(double min, double max, int target) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    throw Error(ErrorCode::InvalidRange, "tick range requires min < max, got [" +
                                             std::to_string(min) + ", " +
                                             std::to_string(max) + "]");
  }
  if (target < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "tick target must be at least 2, got " + std::to_string(target));
  }

  const double range = max - min;
  const int base = static_cast<int>(std::floor(std::log10(range)));

  TickStep best;
  int best_tier = 3;
  long long best_cost = std::numeric_limits<long long>::max();
  bool found = false;
  // Coarse to fine so that ties keep the finer step.
  for (int k = base + 1; k >= base - 3; --k) {
    for (auto it = kMantissas.rbegin(); it != kMantissas.rend(); ++it) {
      const TickStep step{*it, k};
      const long long count = multiples_inside(min, max, step).count();
      if (count < 1) continue;
      const int t = tier(count, target);
      const long long cost = std::llabs(count - target);
      if (t < best_tier || (t == best_tier && cost <= best_cost)) {
        best_tier = t;
        best_cost = cost;
        best = step;
        found = true;
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::InvalidRange, "no tick step fits the range");
  }

  TickSet out;
  out.step = best;
  const Span span = multiples_inside(min, max, best);
  out.values.reserve(static_cast<std::size_t>(span.count()));
  for (long long i = span.first; i <= span.last; ++i) {
    const double v = scaled(static_cast<double>(i) * best.mantissa, best.exponent);
    out.values.push_back(v == 0.0 ? 0.0 : v);
  }
  return out;
}

std::vector<double> tick_positions(double min, double max, int target) {
  return nice_ticks(min, max, target).values;
}

}  // namespace diamondplot
