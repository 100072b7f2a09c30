#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diamondplot {

enum class ErrorCode {
  EmptyData,
  InvalidArgument,
  InvalidViewport,
  SingularTransform,
  InvalidRange,
  InsufficientData,
  DegenerateFit,
  InconsistentBundle,
  UnsupportedVersion,
  ColumnNotFound,
  ParseError,
  UnknownDataset,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True for errors caused by the input data rather than by how the
/// library was called.
bool is_data_error(ErrorCode code) noexcept;

}  // namespace diamondplot
