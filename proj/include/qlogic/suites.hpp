#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qlogic/report.hpp"
#include "qlogic/tolerance.hpp"

namespace qlogic {

/// Outcome of one seeded property suite. Each clause aggregates one family
/// of checks; its note records how many instances passed.
struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  Report report;

  bool passed() const { return report.all_passed(); }
  nlohmann::ordered_json to_json() const;
};

/// lattice, commutator, spectral, com-expansion, determinateness, equality,
/// equivalence, eigenvectors, tautology, measurement.
const std::vector<std::string>& suite_names();

/// Throws UnknownName for a suite that does not exist.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, const Tolerance& tol = {});

}  // namespace qlogic
