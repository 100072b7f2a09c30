#include "diamondplot/dataset.hpp"

#include <cmath>
#include <string>

#include "diamondplot/error.hpp"

namespace diamondplot {

DataSet DataSet::swapped() const {
  DataSet out{label2, label1, {}, source};
  out.values.reserve(values.size());
  for (const Point2& p : values) out.values.push_back({p.a2, p.a1});
  return out;
}

bool same_data(const DataSet& lhs, const DataSet& rhs) noexcept {
  return lhs.label1 == rhs.label1 && lhs.label2 == rhs.label2 &&
         lhs.values == rhs.values;
}

void validate(const DataSet& data) {
  if (data.empty()) throw Error(ErrorCode::EmptyData, "dataset is empty");
  if (data.label1.empty() || data.label2.empty()) {
    throw Error(ErrorCode::InvalidArgument, "dataset labels must be non-empty");
  }
  for (std::size_t i = 0; i < data.values.size(); ++i) {
    const Point2& p = data.values[i];
    if (!std::isfinite(p.a1) || !std::isfinite(p.a2)) {
      throw Error(ErrorCode::InvalidArgument,
                  "point " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace diamondplot
