#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qlogic/algebra.hpp"
#include "qlogic/observable.hpp"
#include "qlogic/report.hpp"
#include "qlogic/state.hpp"

namespace qlogic {

class Rng;

/// Finite POVM: one positive element per distinct real outcome.
struct POVM {
  std::vector<double> outcomes;
  std::vector<CMatrix> elements;

  Index dim() const { return elements.empty() ? 0 : elements.front().rows(); }
  std::size_t size() const noexcept { return outcomes.size(); }
  /// Element for `outcome`, or zero when it is not an outcome.
  CMatrix element(double outcome, double snap = 0.0) const;
  /// Throws NotAPOVM unless every element is positive, they sum to the
  /// identity and the outcomes are distinct.
  void validate(const Tolerance& tol = {}) const;
};

/// (K, sigma, U, M): apparatus space C^dim_k prepared in sigma, unitary
/// interaction on H (x) K, meter observable on K.
struct MeasuringProcess {
  Index dim_h = 0;
  DensityState sigma = DensityState::maximally_mixed(1);
  CMatrix u;
  Observable meter = Observable::decompose("M", CMatrix::Identity(1, 1));
  /// Algebra the POVM must lie in; unset means all of B(H).
  std::optional<MatrixAlgebra> system_algebra;

  Index dim_k() const { return sigma.dim(); }
  /// Throws DimensionMismatch or NotUnitary.
  void validate(const Tolerance& tol = {}) const;
};

/// U^dag (1 (x) M) U.
Observable meter_after(const MeasuringProcess& mp, const Tolerance& tol = {});

/// Pi({m}) = Tr_K[E^{M(t)}({m}) (1 (x) sigma)] per meter eigenvalue.
/// Throws NotAPOVM if the result fails the axioms and ValidationError if
/// an element leaves the system algebra.
POVM povm_of_process(const MeasuringProcess& mp, const Tolerance& tol = {});

struct OutcomeProbability {
  double outcome;
  double probability;
};

/// Pr{x = m || rho} by the joint-space trace, checked against Tr[Pi({m}) rho]
/// to 1e-10. Throws CrossCheckFailure on disagreement.
std::vector<OutcomeProbability> output_distribution(const MeasuringProcess& mp, const DensityState& rho,
                                                    const Tolerance& tol = {});

/// Route agreement bound for output_distribution.
inline constexpr double kOutputRouteTol = 1e-10;

/// A (x) 1 = M(t) in the state rho (x) sigma.
bool measures_in_state(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                       const Tolerance& tol = {});
/// Tr[Pi(D) E^A(G) rho] = Tr[E^A(D n G) rho] on spectral atoms.
bool weakly_measures(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                     const Tolerance& tol = {});
/// <psi, Pi({l}) psi> = <psi, E^A({l}) psi> for every psi in C(A;rho).
bool satisfies_bsf(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                   const Tolerance& tol = {});

/// The three predicates above; throws InconsistentBattery if they disagree.
Report mob_battery(const MeasuringProcess& mp, const Observable& a, const DensityState& rho,
                   const Tolerance& tol = {});

/// Basis vectors, real and complex two-term superpositions, `mixtures`
/// random mixed states and the maximally mixed state.
std::vector<DensityState> state_sample(Index dim, Rng& rng, int mixtures = 4);

/// measures_in_state over the whole sample agrees with Pi = E^A.
/// Throws InconsistentBattery otherwise.
Report global_measurement_check(const MeasuringProcess& mp, const Observable& a,
                                std::span<const DensityState> sample, const Tolerance& tol = {});

/// Process on H (x) C^m realizing the POVM, with sigma = |e1><e1| and the
/// meter diagonal in the standard basis. Throws NotAPOVM; verified by a
/// round trip through povm_of_process.
MeasuringProcess naimark_process(const POVM& povm, const Tolerance& tol = {});

/// (K, sigma, U, f(M)).
MeasuringProcess with_meter_function(const MeasuringProcess& mp, const SpectralFunction& f, std::string name,
                                     const Tolerance& tol = {});

struct SimultaneousMeasurement {
  Report report;
  /// Joint POVM over encoded outcome pairs; set when a witness was built.
  std::optional<POVM> joint;
  std::optional<MeasuringProcess> witness;
  /// Decoded outcome pair for every joint outcome code.
  std::vector<std::pair<double, double>> decode;
};

/// Witness construction for simultaneous measurability of A and B in rho
/// from their simultaneous determinateness.
SimultaneousMeasurement simultaneous_measurability(const Observable& a, const Observable& b,
                                                   const DensityState& rho, const Tolerance& tol = {});

}  // namespace qlogic
