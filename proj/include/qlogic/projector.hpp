#pragma once

#include <span>

#include "qlogic/matrix.hpp"

namespace qlogic {

/// Orthogonal projection on C^n, stored as an orthonormal basis B of its
/// range together with the matrix B B^dag. Constructors always rebuild the
/// matrix from the basis, so idempotence holds to rounding.
class Projector {
 public:
  static Projector zero(Index dim);
  static Projector identity(Index dim);
  /// `basis` must have orthonormal columns up to rounding.
  static Projector from_orthonormal_basis(const CMatrix& basis);
  /// Validates Hermiticity and idempotence at assert_tol, then extracts
  /// the range from the eigenvectors with eigenvalue near 1.
  static Projector from_matrix(const CMatrix& p, const Tolerance& tol = {});

  Index dim() const noexcept { return basis_.rows(); }
  Index rank() const noexcept { return basis_.cols(); }
  const CMatrix& matrix() const noexcept { return matrix_; }
  const CMatrix& basis() const noexcept { return basis_; }
  bool is_zero() const noexcept { return rank() == 0; }
  bool is_identity() const noexcept { return rank() == dim(); }

  /// 1 - P. The result remembers this basis, so complementing twice
  /// returns a bit-identical projector.
  Projector complement() const;

 private:
  Projector(CMatrix basis);
  CMatrix basis_;
  CMatrix matrix_;
  CMatrix complement_basis_;
  bool has_complement_ = false;
};

/// Projector onto {psi : M psi = 0}. Hermitian input uses the eigenvalue
/// route; anything else goes through the SVD.
Projector null_space_projector(const CMatrix& m, const Tolerance& tol = {});
/// Projector onto the span of the columns of an n x k matrix.
Projector column_space_projector(const CMatrix& columns, const Tolerance& tol = {});
Projector column_space_projector(std::span<const CVector> vectors, Index dim,
                                 const Tolerance& tol = {});

}  // namespace qlogic
