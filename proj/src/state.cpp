#include "qlogic/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlogic/error.hpp"

namespace qlogic {

DensityState::DensityState(CMatrix m, Projector support, CMatrix factor)
    : matrix_(std::move(m)), support_(std::move(support)), factor_(std::move(factor)) {}

DensityState DensityState::from_matrix(const CMatrix& rho, const Tolerance& tol) {
  require_square(rho, "DensityState");
  if (!all_finite(rho)) throw Error(ErrorKind::InvalidState, "state has non-finite entries");
  if ((rho - rho.adjoint()).norm() > tol.assert_tol * std::max(1.0, rho.norm())) {
    throw Error(ErrorKind::InvalidState, "state is not Hermitian");
  }
  const EigenSystem eig = hermitian_eig(rho, tol);
  if (eig.values.size() > 0 && eig.values(0) < -tol.assert_tol) {
    throw Error(ErrorKind::InvalidState, "state has negative eigenvalue " + std::to_string(eig.values(0)));
  }
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > tol.assert_tol) {
    throw Error(ErrorKind::InvalidState, "state has trace " + std::to_string(trace));
  }
  const double cutoff = tol.rank_rel_tol * std::max(eig.values.maxCoeff(), 0.0) * static_cast<double>(rho.rows());
  std::vector<Index> kept;
  double mass = 0.0;
  for (Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > cutoff) {
      kept.push_back(i);
      mass += eig.values(i);
    }
  }
  const Index n = rho.rows();
  CMatrix basis(n, static_cast<Index>(kept.size()));
  CMatrix factor(n, static_cast<Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const Index i = kept[k];
    basis.col(static_cast<Index>(k)) = eig.vectors.col(i);
    factor.col(static_cast<Index>(k)) = eig.vectors.col(i) * std::sqrt(eig.values(i) / mass);
  }
  CMatrix m = factor * factor.adjoint();
  return DensityState(std::move(m), Projector::from_orthonormal_basis(basis), std::move(factor));
}

DensityState DensityState::pure(const CVector& psi, const Tolerance& tol) {
  if (psi.size() == 0) throw Error(ErrorKind::InvalidState, "empty state vector");
  const double nrm = psi.norm();
  if (!std::isfinite(nrm) || std::abs(nrm - 1.0) > tol.assert_tol) {
    throw Error(ErrorKind::InvalidState, "state vector has norm " + std::to_string(nrm));
  }
  const CVector v = psi / nrm;
  return DensityState(v * v.adjoint(), Projector::from_orthonormal_basis(v), v);
}

DensityState DensityState::maximally_mixed(Index dim) {
  const CMatrix id = CMatrix::Identity(dim, dim);
  return DensityState(id / static_cast<double>(dim), Projector::identity(dim),
                      id / std::sqrt(static_cast<double>(dim)));
}

double probability(const Projector& p, const DensityState& rho) {
  if (p.dim() != rho.dim()) throw Error(ErrorKind::DimensionMismatch, "probability: dimensions differ");
  const double v = (p.matrix() * rho.matrix()).trace().real();
  return std::clamp(v, 0.0, 1.0);
}

bool holds(const Projector& p, const DensityState& rho, const Tolerance& tol) {
  return probability(p, rho) >= 1.0 - tol.assert_tol;
}

bool fixes(const Projector& p, const DensityState& rho, const Tolerance& tol) {
  if (p.dim() != rho.dim()) throw Error(ErrorKind::DimensionMismatch, "fixes: dimensions differ");
  return (p.matrix() * rho.matrix() - rho.matrix()).norm() <= tol.assert_tol;
}

DensityState tensor(const DensityState& rho, const DensityState& sigma) {
  const CMatrix factor = kron(rho.factor(), sigma.factor());
  const Projector support = Projector::from_orthonormal_basis(kron(rho.support().basis(), sigma.support().basis()));
  return DensityState(factor * factor.adjoint(), support, factor);
}

}  // namespace qlogic
