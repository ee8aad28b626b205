#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace satip {

enum class ErrorCode {
  EmptyPolytope,
  Unbounded,
  InsufficientSamples,
  InconsistentSamples,
  CapExceeded,
  DimensionMismatch,
  SizeMismatch,
  SizeGuardExceeded,
  HeightViolation,
  HeightExceedsRank,
  UnsupportedEmbedding,
  InsufficientHorizon,
  InconsistentSpan,
  RelaxationTooSmall,
  InvalidArgument,
  Overflow,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every domain failure raised by the library carries one of the codes above;
// the CLI maps these onto exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace satip
