#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modlie {

enum class ErrorKind {
  DivisionByZero,
  MixedFields,
  UnsupportedField,
  BadParameters,
  DimensionMismatch,
  NotSquare,
  ZeroPolynomial,
  CapExceeded,
  JacobiViolation,
  AntisymmetryViolation,
  DuplicateLabel,
  NotClosed,
  NotIndependent,
  NotAnIdeal,
  NotInvariant,
  HomomorphismViolation,
  InvalidRepresentation,
  IncompleteSplit,
  BadDimension,
  BadPredicate,
  ParseError,
  Internal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::HomomorphismViolation: return "HomomorphismViolation";
    case ErrorKind::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorKind::IncompleteSplit: return "IncompleteSplit";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BadPredicate: return "BadPredicate";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness` carries basis indices
/// (Jacobi triple, offending pair, ...) when the failure has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace modlie
