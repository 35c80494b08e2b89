#pragma once

#include <stdexcept>
#include <string>

namespace hyperalg {

enum class ErrorCode {
  InvalidParameter,
  AlgebraMismatch,
  NotInvertible,
  NegativeNorm,
  ScalarInput,
  LightlikeInput,
  DegenerateAxis,
  NoRealizableRoots,
  EvenPowerSpacelike,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NegativeNorm: return "NegativeNorm";
    case ErrorCode::ScalarInput: return "ScalarInput";
    case ErrorCode::LightlikeInput: return "LightlikeInput";
    case ErrorCode::DegenerateAxis: return "DegenerateAxis";
    case ErrorCode::NoRealizableRoots: return "NoRealizableRoots";
    case ErrorCode::EvenPowerSpacelike: return "EvenPowerSpacelike";
  }
  return "unknown error";
}

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperalg
