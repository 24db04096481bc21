#pragma once

namespace qlogic {

/// Numerical thresholds shared by every operation.
///
/// rank_rel_tol decides rank: a singular value s is treated as zero when
/// s <= rank_rel_tol * s_max * dimension. assert_tol bounds Frobenius-norm
/// residuals of invariant checks (idempotence, commutation, order,
/// equality). cluster_tol groups eigenvalues: neighbours closer than
/// cluster_tol * max(1, max|lambda|) are one spectral point.
///
/// Required ordering: 0 < rank_rel_tol < cluster_tol <= assert_tol < 1.
struct Tolerance {
  double rank_rel_tol = 1e-9;
  double assert_tol = 1e-8;
  double cluster_tol = 1e-8;

  bool valid() const noexcept;
  /// Throws Error(InvalidTolerance) when the ordering does not hold.
  void validate() const;

  /// Defaults with assert_tol replaced; cluster_tol and rank_rel_tol are
  /// pulled down when needed so the ordering still holds.
  static Tolerance with_assert_tol(double assert_tol);
  /// Defaults, overridden by the QLOGIC_TOL environment variable if set.
  static Tolerance from_environment();
};

}  // namespace qlogic
