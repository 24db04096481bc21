#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qlogic/scenario.hpp"

namespace qlogic {

/// Result of one CLI command: the JSON report, a plain-text rendering of
/// the same numbers and whether every assertion it makes passed.
struct CommandOutput {
  nlohmann::ordered_json json;
  std::string text;
  bool passed = true;
};

/// Truth value of a named proposition: rank, range basis, whether it is
/// standard, and per state whether it is contextually well-formed.
CommandOutput cmd_eval(const Scenario& s, const std::string& proposition, const Tolerance& tol = {});
CommandOutput cmd_prob(const Scenario& s, const std::string& proposition, const std::string& state,
                       const Tolerance& tol = {});
/// kind is "determinate" (one or more observables) or "equal" (exactly
/// two). Passes when the battery verdict is true.
CommandOutput cmd_check(const Scenario& s, const std::string& kind, const std::vector<std::string>& observables,
                        const std::string& state, const Tolerance& tol = {});
/// Meet distribution over the spectral grid; passes when the observables
/// are simultaneously determinate in the state.
CommandOutput cmd_jointdist(const Scenario& s, const std::vector<std::string>& observables, const std::string& state,
                            const Tolerance& tol = {});
/// Measurement battery of a process for an observable in a state, with
/// the output distribution.
CommandOutput cmd_measure(const Scenario& s, const std::string& process, const std::string& observable,
                          const std::string& state, const Tolerance& tol = {});
/// One named property suite, or every suite for "all".
CommandOutput cmd_battery(const std::string& suite, std::uint64_t seed, const Tolerance& tol = {});

/// Exit code for a library error: 1 for failed internal assertions
/// (inconsistent batteries, route cross-checks), 2 for everything caused
/// by the input.
int exit_code_for(const Error& e);

}  // namespace qlogic
