#include "irs/error.hpp"

namespace irs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyWeights: return "EmptyWeights";
    case ErrorCode::kInvalidWeight: return "InvalidWeight";
    case ErrorCode::kInvalidInterval: return "InvalidInterval";
    case ErrorCode::kIndexError: return "IndexError";
    case ErrorCode::kInvalidSampleSize: return "InvalidSampleSize";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kDegenerateSelectivity: return "DegenerateSelectivity";
    case ErrorCode::kMissingWeights: return "MissingWeights";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace irs
