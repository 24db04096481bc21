#include <gtest/gtest.h>

#include "qlogic/error.hpp"
#include "qlogic/matrix.hpp"
#include "qlogic/projector.hpp"
#include "qlogic/random.hpp"
#include "support.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

// Index-sum reference for Tr_K, written independently of the block form.
CMatrix partial_trace_oracle(const CMatrix& m, Index dh, Index dk) {
  CMatrix out = CMatrix::Zero(dh, dh);
  for (Index i = 0; i < dh; ++i)
    for (Index j = 0; j < dh; ++j)
      for (Index k = 0; k < dk; ++k)
        for (Index l = 0; l < dk; ++l)
          if (k == l) out(i, j) += m(i * dk + k, j * dk + l);
  return out;
}

}  // namespace

TEST(HermitianEig, DiagonalSortsAscending) {
  const EigenSystem e = hermitian_eig(diag({3, 1, 2}));
  EXPECT_NEAR(e.values(0), 1.0, 1e-14);
  EXPECT_NEAR(e.values(1), 2.0, 1e-14);
  EXPECT_NEAR(e.values(2), 3.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(1, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(2, 1)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 2)), 1.0, 1e-14);
}

TEST(HermitianEig, PauliX) {
  const EigenSystem e = hermitian_eig(pauli_x());
  EXPECT_NEAR(e.values(0), -1.0, 1e-14);
  EXPECT_NEAR(e.values(1), 1.0, 1e-14);
  const double s = 1.0 / std::sqrt(2.0);
  // Eigenvectors up to phase: (|0> - |1>)/sqrt2 and (|0> + |1>)/sqrt2.
  EXPECT_NEAR(std::abs(e.vectors.col(0).dot(ket({s, -s}))), 1.0, 1e-13);
  EXPECT_NEAR(std::abs(e.vectors.col(1).dot(ket({s, s}))), 1.0, 1e-13);
}

TEST(HermitianEig, ZeroMatrix) {
  const EigenSystem e = hermitian_eig(CMatrix::Zero(4, 4));
  for (Index i = 0; i < 4; ++i) EXPECT_EQ(e.values(i), 0.0);
}

TEST(HermitianEig, Errors) {
  try {
    hermitian_eig(CMatrix::Zero(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonSquare);
  }
  CMatrix m(2, 2);
  m << 0, 1, 0, 0;
  try {
    hermitian_eig(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
}

TEST(HermitianEig, RandomReconstructionProperty) {
  Rng rng(101);
  const Tolerance tol;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.integer(1, 8);
    const CMatrix g = rng.gaussian(n, n);
    const CMatrix h = g + g.adjoint();
    const EigenSystem e = hermitian_eig(h);
    const CMatrix rebuilt = e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE((h - rebuilt).norm(), tol.assert_tol * h.norm());
    EXPECT_LE((e.vectors.adjoint() * e.vectors - identity(n)).norm(), tol.assert_tol);
    for (Index i = 1; i < n; ++i) EXPECT_LE(e.values(i - 1), e.values(i));
  }
}

TEST(NullSpace, Examples) {
  EXPECT_EQ(null_space_projector(identity(3)).rank(), 0);
  const Projector full = null_space_projector(CMatrix::Zero(3, 3));
  EXPECT_LE((full.matrix() - identity(3)).norm(), 1e-14);
  CMatrix zx(2, 2);
  zx << 0, 2, -2, 0;
  EXPECT_EQ(null_space_projector(zx).rank(), 0);
  // [Z, X] computed rather than typed
  EXPECT_LE((commutator(pauli_z(), pauli_x()) - zx).norm(), 1e-15);
}

TEST(NullSpace, RankDeficientProductsProperty) {
  Rng rng(202);
  const Tolerance tol;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.integer(2, 8);
    const Index r = rng.integer(0, static_cast<int>(n - 1));
    const CMatrix m = rng.gaussian(n, r) * rng.gaussian(r, n);
    const Projector p = null_space_projector(m);
    EXPECT_EQ(p.rank(), n - r);
    EXPECT_LE((m * p.matrix()).norm(), tol.assert_tol * std::max(1.0, m.norm()));
    EXPECT_LE((p.matrix() * p.matrix() - p.matrix()).norm(), tol.assert_tol);
    EXPECT_LE((p.matrix() - p.matrix().adjoint()).norm(), tol.assert_tol);
    // Hermitian input goes through the eigenvalue route.
    const CMatrix h = m.adjoint() * m;
    EXPECT_LE((null_space_projector(h).matrix() - p.matrix()).norm(), tol.assert_tol);
  }
}

TEST(ColumnSpace, Examples) {
  const CVector e1 = basis_vector(3, 0);
  const CVector one[] = {e1};
  EXPECT_LE((column_space_projector(one, 3).matrix() - diag({1, 0, 0})).norm(), 1e-14);
  const CVector twice[] = {e1, e1};
  EXPECT_LE((column_space_projector(twice, 3).matrix() - diag({1, 0, 0})).norm(), 1e-14);
  const double s = 1.0 / std::sqrt(2.0);
  const CVector pm[] = {ket({s, s}), ket({s, -s})};
  EXPECT_LE((column_space_projector(pm, 2).matrix() - identity(2)).norm(), 1e-14);
  const CVector mixed[] = {basis_vector(2, 0), basis_vector(3, 0)};
  try {
    column_space_projector(mixed, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Kron, IdentityAndTraceFactor) {
  EXPECT_LE((kron(identity(2), identity(2)) - identity(4)).norm(), 0.0);
  Rng rng(5);
  const CMatrix a = rng.gaussian(3, 3);
  const DensityState sigma = random_state(rng, 2);
  EXPECT_LE((partial_trace_second(kron(a, sigma.matrix()), 3, 2) - a).norm(), 1e-12);
  const CMatrix b = rng.gaussian(2, 2);
  EXPECT_LE((partial_trace_second(kron(a, b), 3, 2) - a * b.trace()).norm(), 1e-12);
  EXPECT_EQ(kron(rng.gaussian(2, 3), rng.gaussian(4, 5)).rows(), 8);
}

TEST(Kron, SwapPartialTrace) {
  CMatrix swap = CMatrix::Zero(4, 4);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) swap(i * 2 + j, j * 2 + i) = 1.0;
  const CMatrix oracle = partial_trace_oracle(swap, 2, 2);
  EXPECT_LE((partial_trace_second(swap, 2, 2) - oracle).norm(), 1e-15);
  EXPECT_LE((oracle - identity(2)).norm(), 1e-15);
}

TEST(Kron, PartialTraceOracleProperty) {
  Rng rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const Index dh = rng.integer(1, 4);
    const Index dk = rng.integer(1, 4);
    const CMatrix m = rng.gaussian(dh * dk, dh * dk);
    const CMatrix got = partial_trace_second(m, dh, dk);
    const CMatrix want = partial_trace_oracle(m, dh, dk);
    EXPECT_LE((got - want).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Kron, PartialTraceShapeError) {
  try {
    partial_trace_second(CMatrix::Zero(5, 5), 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(ToleranceConfig, OrderingAndEnvironment) {
  EXPECT_TRUE(Tolerance{}.valid());
  Tolerance bad;
  bad.cluster_tol = 1e-10;
  bad.rank_rel_tol = 1e-9;
  EXPECT_FALSE(bad.valid());
  EXPECT_THROW(bad.validate(), Error);
  const Tolerance loose = Tolerance::with_assert_tol(1e-6);
  EXPECT_TRUE(loose.valid());
  EXPECT_EQ(loose.assert_tol, 1e-6);
  const Tolerance tight = Tolerance::with_assert_tol(1e-12);
  EXPECT_TRUE(tight.valid());
  EXPECT_THROW(Tolerance::with_assert_tol(2.0), Error);
}

TEST(CommonKernel, MatchesStackedKernelProperty) {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = rng.integer(2, 6);
    const Index k = rng.integer(0, static_cast<int>(n) - 1);
    // Every factor is G W with W of rank k, so the common kernel is ker W.
    const CMatrix w = rng.gaussian(n, k) * rng.gaussian(k, n);
    std::vector<CMatrix> factors;
    for (int f = 0; f < 7; ++f) factors.push_back(rng.gaussian(3, n) * w);
    const CMatrix got = common_kernel_basis(factors, n);
    EXPECT_EQ(got.cols(), n - k);
    for (const CMatrix& f : factors) EXPECT_LE((f * got).norm(), 1e-9 * f.norm() * static_cast<double>(n));
  }
  EXPECT_EQ(common_kernel_basis({}, 3).cols(), 3);
  const CMatrix zero = CMatrix::Zero(2, 3);
  EXPECT_EQ(common_kernel_basis(std::vector<CMatrix>{zero}, 3, {}, 1.0).cols(), 3);
}
