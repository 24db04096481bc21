#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qlogic/error.hpp"

namespace qlogic {

struct Clause {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string note;
};

/// Named list of clause outcomes. Batteries of equivalent conditions are
/// coherent when every clause reaches the same verdict; other reports
/// expect every clause to pass.
struct Report {
  std::string title;
  std::vector<Clause> clauses;
  std::vector<std::string> notes;

  Clause& add(std::string name, bool passed, double residual = 0.0, std::string note = {});
  bool all_passed() const;
  bool all_failed() const;
  bool coherent() const;
  /// Verdict of the first clause; meaningful once coherent() holds.
  bool verdict() const;
  const Clause* find(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Raised when conditions that must be equivalent disagree. Carries the
/// full report so callers can show which clause split off.
class InconsistentBattery : public Error {
 public:
  explicit InconsistentBattery(Report report);
  const Report& report() const noexcept { return report_; }

 private:
  Report report_;
};

/// Rounds to `digits` significant decimal digits; used for every number
/// that leaves the library in a report so output is stable across runs.
double round_sig(double value, int digits = 12);

}  // namespace qlogic
