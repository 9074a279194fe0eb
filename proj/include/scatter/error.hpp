#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scatter {

enum class ErrorKind {
  NonPrime,
  FieldTooLarge,
  EvenCharacteristicRejected,
  DivisionByZero,
  ZeroPolynomial,
  IndexExceedsMinExponent,
  WouldBeZero,
  RhoInBaseField,
  NotADivisor,
  BadIndex,
  HypothesisViolated,
  NotABinomial,
  InvalidArgument,
  Parse,
  UnknownSuite,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::EvenCharacteristicRejected: return "EvenCharacteristicRejected";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::IndexExceedsMinExponent: return "IndexExceedsMinExponent";
    case ErrorKind::WouldBeZero: return "WouldBeZero";
    case ErrorKind::RhoInBaseField: return "RhoInBaseField";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotABinomial: return "NotABinomial";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace scatter
