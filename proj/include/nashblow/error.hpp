#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nashblow {

/// Failure categories. The CLI maps these onto its exit-code contract.
enum class ErrorCode {
  Usage,               // invalid arguments or preconditions
  FieldMismatch,       // characteristic-0 and characteristic-p values mixed
  SingularMatrix,
  NotInSemigroup,
  TruncationTooSmall,  // value-semigroup validation failed inside the truncation
  NonTermination,      // f_{n,j} recurrence did not reach a stable zero tail
  DegreeTooSmall,      // deformation oracle verdict changed when the degree grew
  Internal,            // a proven identity failed: implementation bug
};

std::string_view to_string(ErrorCode code);

class NashError : public std::runtime_error {
 public:
  NashError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw NashError(code, what);
}

}  // namespace nashblow
