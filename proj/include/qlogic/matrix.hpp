#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qlogic/tolerance.hpp"

namespace qlogic {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Eigenvalues ascending, eigenvectors as orthonormal columns in the same order.
struct EigenSystem {
  RVector values;
  CMatrix vectors;
};

/// Frobenius norm; every residual in the library is measured with it.
inline double norm(const CMatrix& m) { return m.norm(); }

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

bool all_finite(const CMatrix& m);
void require_square(const CMatrix& m, const char* what);
void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what);

/// ||M - M^dag|| <= assert_tol * ||M||.
bool is_hermitian(const CMatrix& m, const Tolerance& tol = {});
/// ||U^dag U - I|| <= assert_tol.
bool is_unitary(const CMatrix& u, const Tolerance& tol = {});

/// Decomposes (M + M^dag)/2. Throws NonSquare or NotHermitian.
EigenSystem hermitian_eig(const CMatrix& m, const Tolerance& tol = {});

/// Orthonormal basis of the kernel of an arbitrary (possibly non-square)
/// matrix, by SVD. Columns of the result span {x : m x = 0}.
CMatrix kernel_basis(const CMatrix& m, const Tolerance& tol = {});

/// Kernel of a Hermitian matrix via its eigenvalues: eigenvectors whose
/// |lambda| falls under the rank threshold, relative to
/// max(largest |lambda|, reference).
CMatrix hermitian_kernel_basis(const CMatrix& h, const Tolerance& tol = {}, double reference = 0.0);

/// Common kernel of the factors A_k (each with `cols` columns), from the
/// singular values of the stacked matrix [A_1; A_2; ...]. Prefer this to
/// the kernel of sum A_k^dag A_k: that sum squares the singular values, so
/// a rank threshold on its eigenvalues admits residuals |A_k x| far above
/// the threshold. The stack is compressed by QR as it grows. The threshold
/// is relative to max(largest singular value, reference), so a stack that
/// is zero up to rounding still reads as zero when the caller supplies the
/// scale its factors would have.
CMatrix common_kernel_basis(std::span<const CMatrix> factors, Index cols, const Tolerance& tol = {},
                            double reference = 0.0);

/// Orthonormal basis of the column span of `columns` (n x k, k may be 0).
CMatrix range_basis(const CMatrix& columns, const Tolerance& tol = {});

/// Re-orthonormalizes a basis that is already orthonormal up to rounding.
CMatrix reorthonormalize(const CMatrix& basis);

/// Orthonormal basis of the orthogonal complement of the span of an
/// orthonormal basis in C^n.
CMatrix orthogonal_complement(const CMatrix& orthonormal, Index n);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Tr_K of an operator on H (x) K, H the first factor:
/// result(i, j) = sum_k M(i*dimK + k, j*dimK + k).
CMatrix partial_trace_second(const CMatrix& m, Index dim_h, Index dim_k);

/// Positive square root of a Hermitian PSD matrix; eigenvalues under the
/// rank threshold (rounding) count as zero.
CMatrix psd_sqrt(const CMatrix& m, const Tolerance& tol = {});

/// Half-open index ranges [first, last) of eigenvalue clusters in an
/// ascending list. Neighbours within cluster_tol * max(1, max|lambda|)
/// share a cluster.
std::vector<std::pair<Index, Index>> cluster_ranges(const RVector& ascending,
                                                    const Tolerance& tol = {});

CMatrix stack_columns(std::span<const CVector> columns, Index dim);

/// Column-major vectorization, vec(X)_{i + j n} = X(i, j).
CVector vectorize(const CMatrix& m);
CMatrix unvectorize(const CVector& v, Index n);

}  // namespace qlogic
