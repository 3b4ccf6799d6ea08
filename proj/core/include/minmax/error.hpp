#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minmax {

enum class ErrorCode {
  NotBijection,
  BadEndpoints,
  MalformedProfile,  // shape violation: missing/duplicate (t, gap), bad k, direction mismatch
  InvalidProfile,    // failed validate_profile; raised by solvers that gate on it
  MismatchedN,
  KMismatch,
  COutOfRange,
  NotDirected,
  NotUndirected,
  NotLinear,
  PreconditionViolation,
  CyclicGraph,
  TooLarge,
  InternalInconsistency,
  SyntaxError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is what callers switch on;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace minmax
