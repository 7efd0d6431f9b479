#pragma once

#include <stdexcept>
#include <string>

namespace hgbps {

enum class ErrorCode {
  InvalidMass,
  DimensionMismatch,
  Unsupported,
  UnsupportedClass,
  OrderTooLarge,
  BranchCut,
  PoleHit,
  RayIsBps,
  BoundaryIsBps,
  QuadratureFail,
  NuOutOfStrip,
  ContourHitsPole,
  TruncationInsufficient,
  Inconsistent,
  ConfigError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidMass: return "InvalidMass";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnsupportedClass: return "UnsupportedClass";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::BranchCut: return "BranchCut";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::RayIsBps: return "RayIsBps";
    case ErrorCode::BoundaryIsBps: return "BoundaryIsBps";
    case ErrorCode::QuadratureFail: return "QuadratureFail";
    case ErrorCode::NuOutOfStrip: return "NuOutOfStrip";
    case ErrorCode::ContourHitsPole: return "ContourHitsPole";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hgbps
