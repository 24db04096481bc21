#include "qlogic/random.hpp"

#include <algorithm>
#include <cmath>

#include "qlogic/error.hpp"

namespace qlogic {

CMatrix Rng::gaussian(Index rows, Index cols) {
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = complex_gauss();
  return m;
}

CMatrix random_unitary(Rng& rng, Index n) {
  const CMatrix g = rng.gaussian(n, n);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

Projector random_projector(Rng& rng, Index n, Index rank) {
  return Projector::from_orthonormal_basis(random_unitary(rng, n).leftCols(rank));
}

Projector random_projector(Rng& rng, Index n) {
  return random_projector(rng, n, rng.integer(0, static_cast<int>(n)));
}

std::vector<double> random_integer_spectrum(Rng& rng, Index n, int distinct) {
  const int k = std::max(2, distinct);
  std::vector<int> pool;
  for (int v = -k; v <= k; ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  const int used = std::max(1, std::min<int>(distinct, static_cast<int>(n)));
  std::vector<double> values(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    // Every chosen value appears at least once when n allows it.
    const int slot = i < used ? static_cast<int>(i) : rng.integer(0, used - 1);
    values[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(slot)];
  }
  return values;
}

Observable observable_in_basis(Rng& rng, const CMatrix& u, std::string name, int distinct) {
  const Index n = u.rows();
  const std::vector<double> values = random_integer_spectrum(rng, n, distinct);
  CMatrix d = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = values[static_cast<std::size_t>(i)];
  return Observable::decompose(std::move(name), u * d * u.adjoint());
}

Observable random_observable(Rng& rng, Index n, std::string name, int distinct) {
  return observable_in_basis(rng, random_unitary(rng, n), std::move(name), distinct);
}

CVector random_unit_vector(Rng& rng, Index n) {
  CVector v = rng.gaussian(n, 1);
  return v / v.norm();
}

DensityState random_state(Rng& rng, Index n, Index rank) {
  const CMatrix g = rng.gaussian(n, rank);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityState::from_matrix(rho);
}

DensityState random_state(Rng& rng, Index n) {
  return random_state(rng, n, rng.integer(1, static_cast<int>(n)));
}

DensityState random_state_in(Rng& rng, const Projector& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidState, "random_state_in: zero support");
  const Index rank = rng.integer(1, static_cast<int>(p.rank()));
  const CMatrix g = p.basis() * rng.gaussian(p.rank(), rank);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityState::from_matrix(rho);
}

std::vector<CMatrix> random_povm_elements(Rng& rng, Index n, Index m) {
  std::vector<CMatrix> a;
  CMatrix s = CMatrix::Zero(n, n);
  for (Index k = 0; k < m; ++k) {
    // The first element has full rank so the sum is invertible.
    const Index cols = k == 0 ? n : rng.integer(1, static_cast<int>(n));
    const CMatrix g = rng.gaussian(n, cols);
    a.push_back(g * g.adjoint());
    s += a.back();
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((s + s.adjoint()) * 0.5);
  const RVector inv_root = solver.eigenvalues().cwiseSqrt().cwiseInverse();
  const CMatrix w = solver.eigenvectors() * inv_root.cast<cplx>().asDiagonal() * solver.eigenvectors().adjoint();
  for (CMatrix& ak : a) {
    ak = w * ak * w;
    ak = (ak + ak.adjoint()) * 0.5;
  }
  return a;
}

namespace {

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

CMatrix diag_of(const std::vector<double>& values) {
  const Index n = static_cast<Index>(values.size());
  CMatrix d = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = values[static_cast<std::size_t>(i)];
  return d;
}

}  // namespace

std::vector<Observable> block_commuting_family(Rng& rng, Index n1, Index n2, std::size_t count,
                                               Projector* block) {
  const CMatrix w = random_unitary(rng, n1 + n2);
  const CMatrix u1 = random_unitary(rng, n1);
  std::vector<Observable> out;
  for (std::size_t k = 0; k < count; ++k) {
    const CMatrix a = u1 * diag_of(random_integer_spectrum(rng, n1, 3)) * u1.adjoint();
    CMatrix b(0, 0);
    if (n2 > 0) {
      const CMatrix u2 = random_unitary(rng, n2);
      b = u2 * diag_of(random_integer_spectrum(rng, n2, 3)) * u2.adjoint();
    }
    const CMatrix m = w * block_diag(a, b) * w.adjoint();
    out.push_back(Observable::decompose("X" + std::to_string(k + 1), (m + m.adjoint()) * 0.5));
  }
  if (block) *block = Projector::from_orthonormal_basis(w.leftCols(n1));
  return out;
}

std::pair<Observable, Observable> block_equal_pair(Rng& rng, Index n1, Index n2, Projector* block) {
  const CMatrix w = random_unitary(rng, n1 + n2);
  const CMatrix u1 = random_unitary(rng, n1);
  const CMatrix a = u1 * diag_of(random_integer_spectrum(rng, n1, 3)) * u1.adjoint();
  CMatrix bx(0, 0), by(0, 0);
  if (n2 > 0) {
    const CMatrix ux = random_unitary(rng, n2);
    const CMatrix uy = random_unitary(rng, n2);
    bx = ux * diag_of(random_integer_spectrum(rng, n2, 3)) * ux.adjoint();
    by = uy * diag_of(random_integer_spectrum(rng, n2, 3)) * uy.adjoint();
  }
  const CMatrix mx = w * block_diag(a, bx) * w.adjoint();
  const CMatrix my = w * block_diag(a, by) * w.adjoint();
  if (block) *block = Projector::from_orthonormal_basis(w.leftCols(n1));
  return {Observable::decompose("X", (mx + mx.adjoint()) * 0.5), Observable::decompose("Y", (my + my.adjoint()) * 0.5)};
}

}  // namespace qlogic
