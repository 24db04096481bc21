#include "qlogic/algebra.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

constexpr std::uint64_t kCentralSeed = 0x5eed'c3a7'0000'0001ULL;
constexpr int kCentralAttempts = 5;

void require_dim(const CMatrix& m, Index dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": expected " +
                                                  std::to_string(dim) + "x" + std::to_string(dim) +
                                                  ", got " + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()));
  }
}

// (G^T (x) 1 - 1 (x) G)^dag (G^T (x) 1 - 1 (x) G), the Gram matrix of
// X -> XG - GX in column-major vec coordinates.
CMatrix commutation_operator(const CMatrix& g) {
  const CMatrix id = CMatrix::Identity(g.rows(), g.rows());
  return kron(g.transpose(), id) - kron(id, g);
}

std::vector<CMatrix> columns_as_matrices(const CMatrix& vecs, Index dim) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(vecs.cols()));
  for (Index j = 0; j < vecs.cols(); ++j) out.push_back(unvectorize(vecs.col(j), dim));
  return out;
}

double span_residual(const CMatrix& m, const CMatrix& orthonormal_vecs) {
  const CVector v = vectorize(m);
  if (orthonormal_vecs.cols() == 0) return v.norm();
  return (v - orthonormal_vecs * (orthonormal_vecs.adjoint() * v)).norm();
}

}  // namespace

CMatrix vec_basis(std::span<const CMatrix> matrices, Index dim, const Tolerance& tol) {
  CMatrix cols(dim * dim, static_cast<Index>(matrices.size()));
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    require_dim(matrices[k], dim, "vec_basis");
    cols.col(static_cast<Index>(k)) = vectorize(matrices[k]);
  }
  return range_basis(cols, tol);
}

std::vector<CMatrix> commutant(std::span<const CMatrix> generators, Index dim, const Tolerance& tol) {
  if (dim <= 0) throw Error(ErrorKind::DimensionMismatch, "commutant: dimension must be positive");
  const Index n2 = dim * dim;
  if (generators.empty()) return columns_as_matrices(CMatrix::Identity(n2, n2), dim);
  std::vector<CMatrix> factors;
  double reference = 0.0;
  for (const CMatrix& g : generators) {
    require_dim(g, dim, "commutant");
    reference = std::max(reference, g.norm());
    factors.push_back(commutation_operator(g));
    if ((g - g.adjoint()).norm() > tol.assert_tol * std::max(1.0, g.norm())) {
      factors.push_back(commutation_operator(g.adjoint()));
    }
  }
  return columns_as_matrices(common_kernel_basis(factors, n2, tol, reference), dim);
}

MatrixAlgebra MatrixAlgebra::from_generators(std::span<const CMatrix> generators, Index dim,
                                             const Tolerance& tol) {
  MatrixAlgebra alg;
  alg.dim_ = dim;
  alg.generators_.assign(generators.begin(), generators.end());
  alg.commutant_basis_ = commutant(generators, dim, tol);
  alg.basis_ = commutant(alg.commutant_basis_, dim, tol);

  const CMatrix alg_vecs = vec_basis(alg.basis_, dim, tol);
  const double scale = std::sqrt(static_cast<double>(dim));
  if (span_residual(CMatrix::Identity(dim, dim), alg_vecs) > tol.assert_tol * scale) {
    throw Error(ErrorKind::CrossCheckFailure, "generated algebra does not contain the identity");
  }
  for (const CMatrix& g : generators) {
    if (span_residual(g, alg_vecs) > tol.assert_tol * std::max(1.0, g.norm())) {
      throw Error(ErrorKind::CrossCheckFailure, "generated algebra does not contain a generator");
    }
  }
  const std::vector<CMatrix> triple = commutant(alg.basis_, dim, tol);
  if (triple.size() != alg.commutant_basis_.size()) {
    throw Error(ErrorKind::CrossCheckFailure, "commutant of the double commutant has dimension " +
                                                  std::to_string(triple.size()) + ", expected " +
                                                  std::to_string(alg.commutant_basis_.size()));
  }
  return alg;
}

MatrixAlgebra MatrixAlgebra::from_projectors(std::span<const Projector> projectors, Index dim,
                                             const Tolerance& tol) {
  std::vector<CMatrix> gens;
  gens.reserve(projectors.size());
  for (const Projector& p : projectors) {
    if (p.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "from_projectors: mixed dimensions");
    gens.push_back(p.matrix());
  }
  return from_generators(gens, dim, tol);
}

std::vector<CMatrix> center(const MatrixAlgebra& alg, const Tolerance& tol) {
  const Index n = alg.dim();
  const CMatrix a = vec_basis(alg.basis(), n, tol);
  const CMatrix c = vec_basis(alg.commutant_basis(), n, tol);
  CMatrix stacked(a.rows(), a.cols() + c.cols());
  stacked << a, -c;
  const CMatrix coeffs = kernel_basis(stacked, tol);
  const CMatrix vecs = range_basis(a * coeffs.topRows(a.cols()), tol);
  return columns_as_matrices(vecs, n);
}

bool contains(const MatrixAlgebra& alg, const CMatrix& m, const Tolerance& tol) {
  require_dim(m, alg.dim(), "contains");
  const double bound = tol.assert_tol * std::max(1.0, m.norm());
  for (const CMatrix& b : alg.commutant_basis()) {
    if (commutator(m, b).norm() > bound) return false;
  }
  return true;
}

bool spans_subset(std::span<const CMatrix> basis, const MatrixAlgebra& alg, const Tolerance& tol) {
  const CMatrix vecs = vec_basis(alg.basis(), alg.dim(), tol);
  for (const CMatrix& m : basis) {
    require_dim(m, alg.dim(), "spans_subset");
    if (span_residual(m, vecs) > tol.assert_tol * std::max(1.0, m.norm())) return false;
  }
  return true;
}

bool same_algebra(const MatrixAlgebra& a, const MatrixAlgebra& b, const Tolerance& tol) {
  if (a.dim() != b.dim()) return false;
  return spans_subset(a.basis(), b, tol) && spans_subset(b.basis(), a, tol);
}

std::vector<Projector> minimal_central_projections(const MatrixAlgebra& alg, const Tolerance& tol) {
  const Index n = alg.dim();
  const std::vector<CMatrix> z = center(alg, tol);
  if (z.size() <= 1) return {Projector::identity(n)};

  for (int attempt = 0; attempt < kCentralAttempts; ++attempt) {
    std::mt19937_64 rng(kCentralSeed + static_cast<std::uint64_t>(attempt));
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix h = CMatrix::Zero(n, n);
    for (const CMatrix& zk : z) {
      const CMatrix re = (zk + zk.adjoint()) * 0.5;
      const CMatrix im = (zk - zk.adjoint()) * cplx(0.0, -0.5);
      h += gauss(rng) * re + gauss(rng) * im;
    }
    const EigenSystem eig = hermitian_eig(h, tol);
    const auto ranges = cluster_ranges(eig.values, tol);
    if (ranges.size() != z.size()) continue;

    std::vector<Projector> out;
    bool ok = true;
    for (const auto& [first, last] : ranges) {
      Projector e = Projector::from_orthonormal_basis(eig.vectors.middleCols(first, last - first));
      if (!contains(alg, e.matrix(), tol)) ok = false;
      for (const CMatrix& b : alg.basis()) {
        if (commutator(e.matrix(), b).norm() > tol.assert_tol) ok = false;
      }
      out.push_back(std::move(e));
    }
    if (ok) return out;
  }
  throw Error(ErrorKind::DegenerateRandomization,
              "could not separate the center after " + std::to_string(kCentralAttempts) + " attempts");
}

}  // namespace qlogic
