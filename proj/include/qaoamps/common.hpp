#pragma once

#include <stdexcept>
#include <string>

namespace qaoamps {

inline constexpr const char* kVersion = "0.1.0";

enum class ErrorKind {
  InvalidArgument,
  InvalidState,
  ResourceLimit,
  GenerationFailure,
  NumericalFailure,
  InsufficientData,
  DegenerateNormalization,
  DegenerateCurve,
  ExtrapolationRefused,
  CollapseFailure,
  OptimizationFailure,
  Io,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidState: return "invalid-state";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::GenerationFailure: return "generation-failure";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::DegenerateNormalization: return "degenerate-normalization";
    case ErrorKind::DegenerateCurve: return "degenerate-curve";
    case ErrorKind::ExtrapolationRefused: return "extrapolation-refused";
    case ErrorKind::CollapseFailure: return "collapse-failure";
    case ErrorKind::OptimizationFailure: return "optimization-failure";
    case ErrorKind::Io: return "io-failure";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qaoamps
