#include "qlogic/projector.hpp"

#include <string>

#include "qlogic/error.hpp"

namespace qlogic {

Projector::Projector(CMatrix basis) : basis_(std::move(basis)) {
  matrix_ = basis_ * basis_.adjoint();
}

Projector Projector::complement() const {
  Projector out(has_complement_ ? complement_basis_ : orthogonal_complement(basis_, dim()));
  out.complement_basis_ = basis_;
  out.has_complement_ = true;
  return out;
}

Projector Projector::zero(Index dim) { return Projector(CMatrix(dim, 0)); }

Projector Projector::identity(Index dim) { return Projector(CMatrix::Identity(dim, dim)); }

Projector Projector::from_orthonormal_basis(const CMatrix& basis) {
  return Projector(reorthonormalize(basis));
}

Projector Projector::from_matrix(const CMatrix& p, const Tolerance& tol) {
  require_square(p, "Projector::from_matrix");
  if (!all_finite(p)) throw Error(ErrorKind::NotHermitian, "projector has non-finite entries");
  if ((p - p.adjoint()).norm() > tol.assert_tol) {
    throw Error(ErrorKind::NotHermitian, "projector matrix is not Hermitian");
  }
  if ((p * p - p).norm() > tol.assert_tol * std::max(1.0, p.norm())) {
    throw Error(ErrorKind::ValidationError, "projector matrix is not idempotent");
  }
  const EigenSystem eig = hermitian_eig(p, tol);
  Index count = 0;
  for (Index i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) > 0.5) ++count;
  return Projector(reorthonormalize(eig.vectors.rightCols(count)));
}

Projector null_space_projector(const CMatrix& m, const Tolerance& tol) {
  require_square(m, "null_space_projector");
  if (is_hermitian(m, tol)) return Projector::from_orthonormal_basis(hermitian_kernel_basis(m, tol));
  return Projector::from_orthonormal_basis(kernel_basis(m, tol));
}

Projector column_space_projector(const CMatrix& columns, const Tolerance& tol) {
  return Projector::from_orthonormal_basis(range_basis(columns, tol));
}

Projector column_space_projector(std::span<const CVector> vectors, Index dim, const Tolerance& tol) {
  return column_space_projector(stack_columns(vectors, dim), tol);
}

}  // namespace qlogic
