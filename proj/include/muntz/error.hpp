#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace muntz {

enum class ErrorCode {
  NotAPartition,
  BoxOutsideDiagram,
  EmptyPartition,
  LengthExceedsOrder,
  NotRealizable,
  EnumerationTooLarge,
  RepeatedArguments,
  NotContained,
  NonPositiveArgument,
  SingularSystem,
  DegenerateInterval,
  NonPositiveEndpoint,
  FirstTwoPartsUnequal,
  FirstTwoPartsEqual,
  NotAnElevation,
  IndexOutOfRange,
  PathCountTooLarge,
  DimensionMismatch,
  DegenerateDirection,
  InvalidInput,
  LimitExceeded,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace muntz
