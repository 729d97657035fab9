#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tendonkit {

enum class ErrorCode {
  AngleOutOfRange,
  LengthMismatch,
  DimensionMismatch,
  DoubleCalibration,
  CapacityExceeded,
  InsufficientSamples,
  RankDeficient,
  SingularInnovation,
  NonFinite,
  ValidationFailed,
  ParseError,
  EmptyLog,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// One machine-readable diagnostic produced by a validator.
struct Violation {
  std::string code;  // e.g. "orphan_borrowed_joint"
  std::string path;  // e.g. "groups[1].borrowed_joints[0]"
  std::string message;
};

/// Carries the full list of violations, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : Error(ErrorCode::ValidationFailed, summarize(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& violations);
  std::vector<Violation> violations_;
};

}  // namespace tendonkit
