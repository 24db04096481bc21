#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qlogic {

enum class ErrorKind {
  NonSquare,
  NotHermitian,
  DimensionMismatch,
  NotUnitary,
  InvalidTolerance,
  InvalidState,
  DegenerateRandomization,
  UndefinedAtSpectralPoint,
  FamilyTooLarge,
  CrossCheckFailure,
  UnknownObservable,
  UnboundVariable,
  SyntaxError,
  NotATautology,
  NotCommuting,
  InconsistentBattery,
  NotAPOVM,
  UnknownName,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the proposition parser. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column,
              std::vector<std::string> expected);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace qlogic
