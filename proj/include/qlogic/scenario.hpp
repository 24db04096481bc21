#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "qlogic/evaluator.hpp"
#include "qlogic/measurement.hpp"

namespace qlogic {

/// Validated contents of a scenario file. Vector states are stored as
/// density matrices.
struct Scenario {
  Index dimension = 0;
  ObservableRegistry observables{0};
  std::map<std::string, DensityState> states;
  std::map<std::string, PropPtr> propositions;
  std::map<std::string, std::string> proposition_text;
  std::map<std::string, MeasuringProcess> processes;
  std::optional<std::uint64_t> seed;

  /// Lookups throw UnknownName.
  const Observable& observable(const std::string& name) const;
  const DensityState& state(const std::string& name) const;
  const Prop& proposition(const std::string& name) const;
  const MeasuringProcess& process(const std::string& name) const;
};

/// Throws ParseError carrying a JSON pointer into the document for
/// malformed structure, and ValidationError naming the offending object
/// for well-formed but invalid content.
Scenario parse_scenario(const nlohmann::json& doc, const Tolerance& tol = {});
Scenario parse_scenario_text(const std::string& text, const Tolerance& tol = {});
Scenario load_scenario(const std::string& path, const Tolerance& tol = {});

}  // namespace qlogic
