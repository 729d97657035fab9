#include "tendonkit/error.hpp"

#include <sstream>

namespace tendonkit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DoubleCalibration: return "DoubleCalibration";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularInnovation: return "SingularInnovation";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyLog: return "EmptyLog";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

std::string ValidationError::summarize(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    os << "\n  [" << v.code << "] " << v.path << ": " << v.message;
  }
  return os.str();
}

}  // namespace tendonkit
