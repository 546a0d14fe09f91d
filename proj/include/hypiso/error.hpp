#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypiso {

enum class ErrorCode {
  DimensionMismatch,
  NotOrthogonal,
  WrongComponent,
  SingularMatrix,
  CayleySingular,
  OddReducedDegree,
  NotSelfReciprocal,
  MalformedSpectrum,
  TaxonomyViolation,
  UnsupportedDimension,
  InvalidSignature,
  NotAnH2Element,
  NonRationalNormalization,
  ParseError,
  RangeError,
  InvalidArgument,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can turn it into a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally remember where in the input they happened
/// (1-based; 0 means unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError, what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hypiso
