#include "diamondplot/error.hpp"

namespace diamondplot {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidViewport: return "InvalidViewport";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::InconsistentBundle: return "InconsistentBundle";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::ColumnNotFound: return "ColumnNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownDataset: return "UnknownDataset";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_data_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyData:
    case ErrorCode::InsufficientData:
    case ErrorCode::DegenerateFit:
    case ErrorCode::ColumnNotFound:
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::InconsistentBundle:
    case ErrorCode::UnsupportedVersion:
      return true;
    default:
      return false;
  }
}

}  // namespace diamondplot
