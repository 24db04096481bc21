#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlogic/commutator.hpp"
#include "qlogic/report.hpp"
#include "qlogic/state.hpp"

namespace qlogic {

/// Finitely supported probability measure on value tuples.
struct JointDistribution {
  struct Atom {
    std::vector<double> values;
    double probability = 0.0;
  };
  std::vector<std::string> names;
  std::vector<Atom> atoms;

  double total() const;
  /// Probability of the atom whose values lie within `snap` of `values`,
  /// 0 if absent.
  double at(std::span<const double> values, double snap = 1e-8) const;
  nlohmann::ordered_json to_json() const;
};

/// Tr[E^{X1}(x1) ... E^{Xn}(xn) rho]. Throws NotCommuting unless the
/// observables pairwise commute.
double born_joint(std::span<const Observable> xs, std::span<const double> thresholds, const DensityState& rho,
                  const Tolerance& tol = {});

/// Projector onto the closed span of {B v : B in {Xs}'', v in ran rho}.
Projector cyclic_projector(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol = {});
Projector cyclic_projector(const MatrixAlgebra& alg, const DensityState& rho, const Tolerance& tol = {});

/// Tr[com(Xs) rho] >= 1 - assert_tol.
bool simultaneously_determinate(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol = {});

/// mu(a1, ..., an) = Tr[E^{X1}({a1}) ^ ... ^ E^{Xn}({an}) rho] over the
/// spectral grid, zero atoms dropped.
JointDistribution meet_distribution(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol = {});

struct JpdResult {
  Report report;
  Projector com = Projector::zero(1);
  Projector cyclic = Projector::zero(1);
  /// Present when every clause holds.
  std::optional<JointDistribution> distribution;
};

/// Evaluates the equivalent characterizations of simultaneous
/// determinateness independently. Throws InconsistentBattery when they
/// disagree.
JpdResult jpd_battery(std::span<const Observable> xs, const DensityState& rho, const Tolerance& tol = {});

struct EqualityRoutes {
  /// Common kernel of E^X(l) - E^Y(l) over merged thresholds l.
  Projector thresholds = Projector::zero(1);
  /// Common kernel of E^Y({b}) E^X({a}) over merged atoms a != b.
  Projector atoms = Projector::zero(1);
};
EqualityRoutes equality_routes(const Observable& x, const Observable& y, const Tolerance& tol = {});

/// Projector onto {psi : E^X(l) psi = E^Y(l) psi for every threshold l},
/// cross-checked against orthogonality of X and Y on disjoint spectral
/// atoms. Throws CrossCheckFailure when the routes disagree.
Projector equality_projector(const Observable& x, const Observable& y, const Tolerance& tol = {});

struct IdResult {
  Report report;
  Projector equality = Projector::zero(1);
  std::optional<JointDistribution> distribution;
};

/// Equivalent characterizations of X = Y in rho. Throws InconsistentBattery
/// when they disagree.
IdResult id_battery(const Observable& x, const Observable& y, const DensityState& rho, const Tolerance& tol = {});

/// Reflexivity, symmetry and transitivity of the equality projector.
Report equivalence_relation_check(const Observable& x, const Observable& y, const Observable& z,
                                  const Tolerance& tol = {});

enum class EigenMode { Determinate, Equal };

/// Span of simultaneous eigenvectors (Determinate) or of common
/// eigenvectors with a common eigenvalue (Equal, exactly two
/// observables). Checked against com resp. the equality projector;
/// throws CrossCheckFailure on mismatch.
Projector common_eigenvector_analysis(std::span<const Observable> xs, EigenMode mode, const Tolerance& tol = {});

}  // namespace qlogic
