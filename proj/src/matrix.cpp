#include "qlogic/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

double rank_threshold(double largest, Index dimension, const Tolerance& tol) {
  return tol.rank_rel_tol * largest * static_cast<double>(std::max<Index>(dimension, 1));
}

}  // namespace

bool all_finite(const CMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::NonSquare, std::string(what) + ": expected a non-empty square matrix, got " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

bool is_hermitian(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol.assert_tol * m.norm();
}

bool is_unitary(const CMatrix& u, const Tolerance& tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm() <= tol.assert_tol;
}

EigenSystem hermitian_eig(const CMatrix& m, const Tolerance& tol) {
  require_square(m, "hermitian_eig");
  if (!all_finite(m)) throw Error(ErrorKind::NotHermitian, "hermitian_eig: non-finite entries");
  if (!is_hermitian(m, tol)) {
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eig: asymmetry " + std::to_string((m - m.adjoint()).norm()) +
                    " exceeds tolerance");
  }
  const CMatrix sym = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix kernel_basis(const CMatrix& m, const Tolerance& tol) {
  const Index cols = m.cols();
  if (cols == 0) return CMatrix(0, 0);
  if (m.rows() == 0) return CMatrix::Identity(cols, cols);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  const double largest = s.size() > 0 ? s(0) : 0.0;
  const double threshold = rank_threshold(largest, std::max(m.rows(), cols), tol);
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++rank;
  return reorthonormalize(svd.matrixV().rightCols(cols - rank));
}

CMatrix hermitian_kernel_basis(const CMatrix& h, const Tolerance& tol, double reference) {
  require_square(h, "hermitian_kernel_basis");
  const CMatrix sym = (h + h.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  const RVector& values = solver.eigenvalues();
  const double largest = std::max(values.cwiseAbs().maxCoeff(), reference);
  const double threshold = rank_threshold(largest, h.rows(), tol);
  std::vector<Index> keep;
  for (Index i = 0; i < values.size(); ++i)
    if (std::abs(values(i)) <= threshold) keep.push_back(i);
  CMatrix out(h.rows(), static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k)
    out.col(static_cast<Index>(k)) = solver.eigenvectors().col(keep[k]);
  return reorthonormalize(out);
}

CMatrix common_kernel_basis(std::span<const CMatrix> factors, Index cols, const Tolerance& tol, double reference) {
  if (cols <= 0) return CMatrix(0, 0);
  CMatrix stack(0, cols);
  // Replaces the stack by its R factor; R^dag R = stack^dag stack.
  const auto compress = [&] {
    if (stack.rows() <= cols) return;
    const Eigen::HouseholderQR<CMatrix> qr(stack);
    stack = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  };
  for (const CMatrix& f : factors) {
    if (f.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "common_kernel_basis: factor width differs");
    if (f.rows() == 0) continue;
    CMatrix grown(stack.rows() + f.rows(), cols);
    grown << stack, f;
    stack = std::move(grown);
    if (stack.rows() >= 4 * cols) compress();
  }
  compress();
  if (stack.rows() == 0) return CMatrix::Identity(cols, cols);
  Eigen::JacobiSVD<CMatrix> svd(stack, Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  const double largest = std::max(s.size() > 0 ? s(0) : 0.0, reference);
  const double threshold = rank_threshold(largest, cols, tol);
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++rank;
  return reorthonormalize(svd.matrixV().rightCols(cols - rank));
}

CMatrix range_basis(const CMatrix& columns, const Tolerance& tol) {
  const Index n = columns.rows();
  if (columns.cols() == 0 || n == 0) return CMatrix(n, 0);
  Eigen::JacobiSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  const RVector& s = svd.singularValues();
  const double threshold = rank_threshold(s(0), std::max(n, columns.cols()), tol);
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold && s(i) > 0.0) ++rank;
  return reorthonormalize(svd.matrixU().leftCols(rank));
}

CMatrix reorthonormalize(const CMatrix& basis) {
  const Index n = basis.rows();
  const Index r = basis.cols();
  if (r == 0) return CMatrix(n, 0);
  Eigen::HouseholderQR<CMatrix> qr(basis);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, r);
  return q;
}

CMatrix orthogonal_complement(const CMatrix& orthonormal, Index n) {
  const Index r = orthonormal.cols();
  if (r == 0) return CMatrix::Identity(n, n);
  if (r >= n) return CMatrix(n, 0);
  Eigen::HouseholderQR<CMatrix> qr(orthonormal);
  CMatrix q = qr.householderQ();
  return q.rightCols(n - r);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix partial_trace_second(const CMatrix& m, Index dim_h, Index dim_k) {
  if (dim_h <= 0 || dim_k <= 0 || m.rows() != dim_h * dim_k || m.cols() != dim_h * dim_k) {
    throw Error(ErrorKind::DimensionMismatch,
                "partial_trace_second: matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected square of size " +
                    std::to_string(dim_h * dim_k));
  }
  CMatrix out = CMatrix::Zero(dim_h, dim_h);
  for (Index i = 0; i < dim_h; ++i)
    for (Index j = 0; j < dim_h; ++j)
      out(i, j) = m.block(i * dim_k, j * dim_k, dim_k, dim_k).trace();
  return out;
}

CMatrix psd_sqrt(const CMatrix& m, const Tolerance& tol) {
  const EigenSystem eig = hermitian_eig(m, tol);
  // Rounding-level eigenvalues would otherwise turn into square roots of
  // order 1e-8.
  const double floor = tol.rank_rel_tol * std::max(eig.values.maxCoeff(), 0.0) * static_cast<double>(m.rows());
  RVector roots = eig.values.unaryExpr([floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
  return eig.vectors * roots.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
}

std::vector<std::pair<Index, Index>> cluster_ranges(const RVector& ascending, const Tolerance& tol) {
  std::vector<std::pair<Index, Index>> out;
  const Index n = ascending.size();
  if (n == 0) return out;
  const double scale = std::max(1.0, ascending.cwiseAbs().maxCoeff());
  const double gap = tol.cluster_tol * scale;
  Index first = 0;
  for (Index i = 1; i < n; ++i) {
    if (ascending(i) - ascending(i - 1) > gap) {
      out.emplace_back(first, i);
      first = i;
    }
  }
  out.emplace_back(first, n);
  return out;
}

CMatrix stack_columns(std::span<const CVector> columns, Index dim) {
  CMatrix out(dim, static_cast<Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k].size() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "vector " + std::to_string(k) + " has dimension " +
                                                    std::to_string(columns[k].size()) +
                                                    ", expected " + std::to_string(dim));
    }
    out.col(static_cast<Index>(k)) = columns[k];
  }
  return out;
}

CVector vectorize(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

CMatrix unvectorize(const CVector& v, Index n) {
  return Eigen::Map<const CMatrix>(v.data(), n, n);
}

}  // namespace qlogic
