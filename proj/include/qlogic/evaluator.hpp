#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlogic/proposition.hpp"
#include "qlogic/relations.hpp"

namespace qlogic {

/// Named observables on one Hilbert space.
class ObservableRegistry {
 public:
  explicit ObservableRegistry(Index dim) : dim_(dim) {}

  /// Throws DimensionMismatch for a foreign dimension; a repeated name
  /// replaces the earlier entry.
  void add(Observable x);
  void add(const std::string& name, Observable x);
  /// Throws UnknownObservable.
  const Observable& get(const std::string& name) const;
  bool has(const std::string& name) const { return items_.count(name) > 0; }
  Index dim() const noexcept { return dim_; }
  std::vector<std::string> names() const;
  /// Observables mentioned by `p`, in order of first mention.
  std::vector<Observable> resolve(const Prop& p) const;

 private:
  Index dim_;
  std::map<std::string, Observable> items_;
};

/// Projection-valued truth value. Throws UnknownObservable, and
/// UnboundVariable on skeleton leaves.
Projector truth_value(const Prop& p, const ObservableRegistry& reg, const Tolerance& tol = {});

/// Every pair of mentioned observables commutes.
bool is_standard(const Prop& p, const ObservableRegistry& reg, const Tolerance& tol = {});

/// The mentioned observables are simultaneously determinate in rho.
bool is_contextually_wellformed(const Prop& p, const ObservableRegistry& reg, const DensityState& rho,
                                const Tolerance& tol = {});

/// Re Tr[[[p]] rho], clamped to [0, 1].
double probability(const Prop& p, const ObservableRegistry& reg, const DensityState& rho,
                   const Tolerance& tol = {});
bool holds(const Prop& p, const ObservableRegistry& reg, const DensityState& rho, const Tolerance& tol = {});

/// Replaces each VarRef by the proposition bound to its name. Throws
/// UnboundVariable for a variable missing from `binding`.
PropPtr instantiate(const Prop& skeleton, const std::map<std::string, PropPtr>& binding);

/// Truth-table check over all 2^k assignments of the skeleton's variables.
bool is_classical_tautology(const Prop& skeleton);

/// com of the observables mentioned by the instance lies below its truth
/// value. Throws NotATautology when the skeleton fails the truth table.
Report tautology_transfer_check(const Prop& skeleton, const std::map<std::string, PropPtr>& binding,
                                const ObservableRegistry& reg, const Tolerance& tol = {});

}  // namespace qlogic
