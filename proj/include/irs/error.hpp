#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irs {

enum class ErrorCode {
  kEmptyWeights,
  kInvalidWeight,
  kInvalidInterval,
  kIndexError,
  kInvalidSampleSize,
  kDuplicateId,
  kNotFound,
  kDegenerateSelectivity,
  kMissingWeights,
  kInvalidArgument,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by bad input rather than the environment.
  bool is_validation() const noexcept { return code_ != ErrorCode::kIo; }

 private:
  ErrorCode code_;
};

}  // namespace irs
