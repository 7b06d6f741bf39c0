#pragma once

#include <stdexcept>
#include <string>

namespace bforge {

// Failure classes surfaced by the library. The CLI maps them to exit codes:
// Parse -> 2, Budget -> 3, everything else -> 1.
enum class ErrorCode {
  Parse,
  Budget,
  CertificateMismatch,
  HypothesisViolated,
  OrientationRequired,
  UnknownRelation,
  WidthMismatch,
  DegreeMismatch,
  InadmissibleHilbertFunction,
  Unstabilized,
  WeightNotFound,
  NotComparable,
  Validation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

  int exit_code() const {
    switch (code_) {
      case ErrorCode::Parse:
        return 2;
      case ErrorCode::Budget:
        return 3;
      default:
        return 1;
    }
  }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Budget: return "Budget";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::OrientationRequired: return "OrientationRequired";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InadmissibleHilbertFunction: return "InadmissibleHilbertFunction";
    case ErrorCode::Unstabilized: return "Unstabilized";
    case ErrorCode::WeightNotFound: return "WeightNotFound";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::Validation: return "Validation";
  }
  return "Unknown";
}

// Work limits threaded through every potentially expensive routine.
// Defaults match the workspace configuration defaults.
struct Limits {
  long spair_budget = 200000;
  long enum_budget = 1000000;
  int retries = 3;
  long entropy_bound = 1000000;
};

}  // namespace bforge
