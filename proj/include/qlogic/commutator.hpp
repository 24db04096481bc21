#pragma once

#include <span>
#include <string>
#include <vector>

#include "qlogic/algebra.hpp"
#include "qlogic/observable.hpp"
#include "qlogic/report.hpp"

namespace qlogic {

struct ProjectorFamily {
  Index dim = 0;
  std::vector<Projector> items;
  std::vector<std::string> labels;

  static ProjectorFamily of(std::vector<Projector> items);
  void push(Projector p, std::string label = {});
  std::size_t size() const noexcept { return items.size(); }
};

/// Largest family size accepted by com_finite (2^12 meet terms).
inline constexpr std::size_t kComFiniteLimit = 12;

/// (P^Q) v (P^Q') v (P'^Q) v (P'^Q'), primes denoting orthocomplements.
Projector com_marsden(const Projector& p, const Projector& q, const Tolerance& tol = {});

/// Join over all sign assignments of the meet of signed members.
/// Throws FamilyTooLarge above kComFiniteLimit members.
Projector com_finite(const ProjectorFamily& f, const Tolerance& tol = {});

/// Projector onto the vectors psi with [P1, P2] P3 psi = 0 for all members
/// P1, P2, P3, found as one common kernel.
Projector com_nullspace(const ProjectorFamily& f, const Tolerance& tol = {});

/// Threshold projectors E^X(lambda) over the spectrum of every observable.
ProjectorFamily spectral_family(std::span<const Observable> xs);
/// Every eigenprojector of every observable.
std::vector<Projector> eigenprojectors(std::span<const Observable> xs);
/// The algebra generated by the eigenprojectors of xs.
MatrixAlgebra generated_algebra(std::span<const Observable> xs, const Tolerance& tol = {});

/// Common kernel of the [B_i, B_j] over pairs of algebra basis elements.
Projector com_algebra_route(const MatrixAlgebra& alg, const Tolerance& tol = {});

/// com of the spectral family, computed through the threshold projectors
/// and through commutators of the generated algebra. The two must agree,
/// otherwise CrossCheckFailure.
Projector com_observables(std::span<const Observable> xs, const Tolerance& tol = {});
Projector com_observables(std::span<const Observable> xs, const MatrixAlgebra& alg,
                          const Tolerance& tol = {});

/// Checks that com(F) is the maximum subcommutator of F inside alg.
/// Maximality is sampled through the minimal central projections.
Report verify_subcommutator(const ProjectorFamily& f, const MatrixAlgebra& alg, const Tolerance& tol = {});

/// With c = com(F): alg is abelian under c, and no minimal central
/// summand under 1 - c is abelian.
Report boolean_factorization_check(const ProjectorFamily& f, const MatrixAlgebra& alg,
                                   const Tolerance& tol = {});

}  // namespace qlogic
