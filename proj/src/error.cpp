#include "qlogic/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qlogic/tolerance.hpp"

namespace qlogic {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::DegenerateRandomization: return "DegenerateRandomization";
    case ErrorKind::UndefinedAtSpectralPoint: return "UndefinedAtSpectralPoint";
    case ErrorKind::FamilyTooLarge: return "FamilyTooLarge";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorKind::UnknownObservable: return "UnknownObservable";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotATautology: return "NotATautology";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::InconsistentBattery: return "InconsistentBattery";
    case ErrorKind::NotAPOVM: return "NotAPOVM";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

SyntaxError::SyntaxError(const std::string& message, int line, int column,
                         std::vector<std::string> expected)
    : Error(ErrorKind::SyntaxError, message + " at line " + std::to_string(line) +
                                        ", column " + std::to_string(column)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool Tolerance::valid() const noexcept {
  return rank_rel_tol > 0.0 && rank_rel_tol < cluster_tol && cluster_tol <= assert_tol &&
         assert_tol < 1.0 && std::isfinite(rank_rel_tol);
}

void Tolerance::validate() const {
  if (!valid()) {
    char got[96];
    std::snprintf(got, sizeof got, "(got %g, %g, %g)", rank_rel_tol, cluster_tol, assert_tol);
    throw Error(ErrorKind::InvalidTolerance,
                std::string("require 0 < rank_rel_tol < cluster_tol <= assert_tol < 1 ") + got);
  }
}

Tolerance Tolerance::with_assert_tol(double assert_tol) {
  Tolerance tol;
  tol.assert_tol = assert_tol;
  if (tol.cluster_tol > assert_tol) tol.cluster_tol = assert_tol;
  if (tol.rank_rel_tol >= tol.cluster_tol) tol.rank_rel_tol = tol.cluster_tol / 10.0;
  tol.validate();
  return tol;
}

Tolerance Tolerance::from_environment() {
  const char* env = std::getenv("QLOGIC_TOL");
  if (env == nullptr || *env == '\0') return Tolerance{};
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0') {
    throw Error(ErrorKind::InvalidTolerance, std::string("QLOGIC_TOL is not a decimal: ") + env);
  }
  return with_assert_tol(value);
}

}  // namespace qlogic
