#pragma once

#include "qlogic/projector.hpp"

namespace qlogic {

/// Density operator: positive semidefinite with unit trace. Eigenvalues
/// under rank_rel_tol are dropped and the rest renormalized, so the
/// support projector has the numerical rank.
class DensityState {
 public:
  /// Throws InvalidState when an eigenvalue is below -assert_tol or the
  /// trace is off by more than assert_tol.
  static DensityState from_matrix(const CMatrix& rho, const Tolerance& tol = {});
  /// |psi><psi| for psi normalized within assert_tol.
  static DensityState pure(const CVector& psi, const Tolerance& tol = {});
  static DensityState maximally_mixed(Index dim);

  Index dim() const noexcept { return matrix_.rows(); }
  const CMatrix& matrix() const noexcept { return matrix_; }
  const Projector& support() const noexcept { return support_; }
  /// n x rank factor R with rho = R R^dag; its columns span the support.
  const CMatrix& factor() const noexcept { return factor_; }

 private:
  DensityState(CMatrix m, Projector support, CMatrix factor);
  friend DensityState tensor(const DensityState& rho, const DensityState& sigma);
  CMatrix matrix_;
  Projector support_;
  CMatrix factor_;
};

/// Re Tr[P rho], clamped to [0, 1].
double probability(const Projector& p, const DensityState& rho);
/// Tr[P rho] >= 1 - assert_tol.
bool holds(const Projector& p, const DensityState& rho, const Tolerance& tol = {});
/// ||P rho - rho|| <= assert_tol.
bool fixes(const Projector& p, const DensityState& rho, const Tolerance& tol = {});

/// rho (x) sigma.
DensityState tensor(const DensityState& rho, const DensityState& sigma);

}  // namespace qlogic
