#pragma once

#include <span>
#include <vector>

#include "qlogic/projector.hpp"

namespace qlogic {

/// Basis of {X : [X, G] = [X, G^dag] = 0 for every generator G}. The basis
/// is orthonormal for the Hilbert-Schmidt inner product. With no
/// generators the result is the full matrix algebra (matrix units).
std::vector<CMatrix> commutant(std::span<const CMatrix> generators, Index dim,
                               const Tolerance& tol = {});

/// The *-algebra generated by a set of matrices with the identity adjoined,
/// computed as a double commutant. Bases are Hilbert-Schmidt orthonormal.
class MatrixAlgebra {
 public:
  static MatrixAlgebra from_generators(std::span<const CMatrix> generators, Index dim,
                                       const Tolerance& tol = {});
  static MatrixAlgebra from_projectors(std::span<const Projector> projectors, Index dim,
                                       const Tolerance& tol = {});

  Index dim() const noexcept { return dim_; }
  const std::vector<CMatrix>& generators() const noexcept { return generators_; }
  const std::vector<CMatrix>& basis() const noexcept { return basis_; }
  const std::vector<CMatrix>& commutant_basis() const noexcept { return commutant_basis_; }
  Index algebra_dimension() const noexcept { return static_cast<Index>(basis_.size()); }

 private:
  MatrixAlgebra() = default;
  Index dim_ = 0;
  std::vector<CMatrix> generators_;
  std::vector<CMatrix> basis_;
  std::vector<CMatrix> commutant_basis_;
};

/// Basis of span(alg) intersected with span(alg').
std::vector<CMatrix> center(const MatrixAlgebra& alg, const Tolerance& tol = {});

/// Double-commutant membership: M commutes with every commutant element.
bool contains(const MatrixAlgebra& alg, const CMatrix& m, const Tolerance& tol = {});

/// Whether every element of `basis` lies in span(alg), by projection
/// residual in the Hilbert-Schmidt geometry.
bool spans_subset(std::span<const CMatrix> basis, const MatrixAlgebra& alg, const Tolerance& tol = {});
bool same_algebra(const MatrixAlgebra& a, const MatrixAlgebra& b, const Tolerance& tol = {});

/// Minimal projections of the center: orthogonal, summing to the identity.
/// Found by diagonalizing a random self-adjoint central element; retried
/// with a new seed when the eigenvalue clusters do not separate the center.
std::vector<Projector> minimal_central_projections(const MatrixAlgebra& alg,
                                                   const Tolerance& tol = {});

/// Orthonormalized vec() columns of a list of n x n matrices.
CMatrix vec_basis(std::span<const CMatrix> matrices, Index dim, const Tolerance& tol = {});

}  // namespace qlogic
