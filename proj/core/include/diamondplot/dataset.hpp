#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diamondplot {

/// One bivariate observation. The coordinates are called a1/a2 rather than
/// x/y because neither variable is treated as the independent one.
struct Point2 {
  double a1 = 0.0;
  double a2 = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Two equal-length labeled numeric series.
struct DataSet {
  std::string label1;
  std::string label2;
  std::vector<Point2> values;
  std::string source;  // file path or "builtin:<name>"

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }

  /// Returns a copy with the two variables exchanged.
  DataSet swapped() const;
};

/// Labels and values must match; the provenance tag is ignored.
bool same_data(const DataSet& lhs, const DataSet& rhs) noexcept;

/// Throws EmptyData for an empty set and InvalidArgument for empty labels or
/// non-finite values.
void validate(const DataSet& data);

/// FNV-1a over the canonical JSON form of the dataset (labels, values at
/// 6 significant digits). Stable across a serialization round trip.
std::uint64_t dataset_hash(const DataSet& data);

}  // namespace diamondplot
