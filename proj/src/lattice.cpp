#include "qlogic/lattice.hpp"

#include <string>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

void require_same_dim(const Projector& p, const Projector& q, const char* what) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dimensions " +
                                                  std::to_string(p.dim()) + " and " +
                                                  std::to_string(q.dim()));
  }
}

}  // namespace

Projector meet(const Projector& p, const Projector& q, const Tolerance& tol) {
  require_same_dim(p, q, "meet");
  if (p.is_zero() || q.is_identity()) return p;
  if (q.is_zero() || p.is_identity()) return q;
  // (1 - P) psi = 0 iff psi is orthogonal to a basis of the complement.
  const CMatrix factors[] = {p.complement().basis().adjoint(), q.complement().basis().adjoint()};
  return Projector::from_orthonormal_basis(common_kernel_basis(factors, p.dim(), tol, 1.0));
}

Projector ortho(const Projector& p) { return p.complement(); }

Projector join(const Projector& p, const Projector& q, const Tolerance& tol) {
  require_same_dim(p, q, "join");
  return ortho(meet(ortho(p), ortho(q), tol));
}

Projector meet_all(std::span<const Projector> ps, Index dim, const Tolerance& tol) {
  std::vector<CMatrix> factors;
  for (const Projector& p : ps) {
    if (p.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "meet_all: mixed dimensions");
    if (p.is_zero()) return Projector::zero(dim);
    factors.push_back(p.complement().basis().adjoint());
  }
  if (ps.empty()) return Projector::identity(dim);
  return Projector::from_orthonormal_basis(common_kernel_basis(factors, dim, tol, 1.0));
}

Projector join_all(std::span<const Projector> ps, Index dim, const Tolerance& tol) {
  Index total = 0;
  for (const Projector& p : ps) {
    if (p.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "join_all: mixed dimensions");
    total += p.rank();
  }
  CMatrix columns(dim, total);
  Index at = 0;
  for (const Projector& p : ps) {
    columns.middleCols(at, p.rank()) = p.basis();
    at += p.rank();
  }
  return column_space_projector(columns, tol);
}

bool commutes(const Projector& p, const Projector& q, const Tolerance& tol) {
  require_same_dim(p, q, "commutes");
  return commutator(p.matrix(), q.matrix()).norm() <= tol.assert_tol;
}

bool leq(const Projector& p, const Projector& q, const Tolerance& tol) {
  require_same_dim(p, q, "leq");
  return (q.matrix() * p.matrix() - p.matrix()).norm() <= tol.assert_tol;
}

double distance(const Projector& p, const Projector& q) {
  require_same_dim(p, q, "distance");
  return (p.matrix() - q.matrix()).norm();
}

bool approx_equal(const Projector& p, const Projector& q, const Tolerance& tol) {
  return distance(p, q) <= tol.assert_tol;
}

Projector sasaki_implies(const Projector& p, const Projector& q, const Tolerance& tol) {
  require_same_dim(p, q, "sasaki_implies");
  return join(ortho(p), meet(p, q, tol), tol);
}

Projector logical_equiv(const Projector& p, const Projector& q, const Tolerance& tol) {
  return meet(sasaki_implies(p, q, tol), sasaki_implies(q, p, tol), tol);
}

}  // namespace qlogic
