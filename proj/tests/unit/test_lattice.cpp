#include <gtest/gtest.h>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/random.hpp"
#include "support.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

// Meet as the limit of (PQ)^n; converges geometrically for n = 2 unless the
// lines coincide, and 200 rounds are far past rounding level.
CMatrix weak_limit_meet(const CMatrix& p, const CMatrix& q, int rounds = 200) {
  CMatrix pq = p * q;
  CMatrix acc = CMatrix::Identity(p.rows(), p.cols());
  for (int i = 0; i < rounds; ++i) acc = acc * pq;
  return acc;
}

// Second path for the Sasaki arrow: complement as 1 - P, meet by weak
// limit, join as the span of stacked eigenvectors with eigenvalue 1.
CMatrix sasaki_oracle(const CMatrix& p, const CMatrix& q) {
  const Index n = p.rows();
  const CMatrix pc = CMatrix::Identity(n, n) - p;
  const CMatrix m = weak_limit_meet(p, q);
  Eigen::JacobiSVD<CMatrix> svd(CMatrix(pc + m), Eigen::ComputeFullU);
  Index rank = 0;
  for (Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-9) ++rank;
  const CMatrix u = svd.matrixU().leftCols(rank);
  return u * u.adjoint();
}

Projector proj(const CMatrix& m) { return Projector::from_matrix(m); }

}  // namespace

TEST(Meet, Examples) {
  Rng rng(1);
  const Projector p = random_projector(rng, 4, 2);
  EXPECT_TRUE(approx_equal(meet(p, p), p));
  EXPECT_TRUE(meet(z_up(), x_up()).is_zero());
  EXPECT_TRUE(approx_equal(meet(proj(diag({1, 1, 0})), proj(diag({0, 1, 1}))), proj(diag({0, 1, 0}))));
}

TEST(Meet, WeakLimitOracleInTwoDimensions) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Projector p = random_projector(rng, 2);
    const Projector q = random_projector(rng, 2);
    // (PQ)^n contracts like overlap^n for distinct lines; keep the overlap
    // small enough that 200 rounds reach rounding level.
    const double overlap = (p.matrix() * q.matrix()).trace().real();
    if (p.rank() == 1 && q.rank() == 1 && overlap > 0.9 && overlap < 1.0 - 1e-12) continue;
    const CMatrix oracle = weak_limit_meet(p.matrix(), q.matrix());
    EXPECT_LE((meet(p, q).matrix() - oracle).norm(), 1e-8);
  }
}

TEST(JoinOrtho, Examples) {
  Rng rng(3);
  const Projector p = random_projector(rng, 5, 2);
  EXPECT_TRUE(join(p, ortho(p)).is_identity());
  EXPECT_TRUE(ortho(Projector::identity(3)).is_zero());
  EXPECT_TRUE(approx_equal(join(z_up(), x_up()), Projector::identity(2)));
  EXPECT_THROW(join(z_up(), Projector::identity(3)), Error);
}

TEST(Commutes, Examples) {
  EXPECT_TRUE(commutes(proj(diag({1, 0, 1})), proj(diag({0, 0, 1}))));
  EXPECT_FALSE(commutes(z_up(), x_up()));
  Rng rng(4);
  const Projector p = random_projector(rng, 4, 2);
  EXPECT_TRUE(commutes(p, ortho(p)));
}

TEST(Commutes, MatchesDecompositionCriterion) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.integer(2, 6);
    const Projector q = random_projector(rng, n);
    Projector p = random_projector(rng, n);
    if (rng.coin()) {
      // Commuting case: P spanned by vectors inside ran Q and inside ran Q-perp.
      const CMatrix b = q.basis() * random_unitary(rng, q.rank()).leftCols(rng.integer(0, static_cast<int>(q.rank())));
      const Projector qc = ortho(q);
      const CMatrix c = qc.basis() * random_unitary(rng, qc.rank()).leftCols(rng.integer(0, static_cast<int>(qc.rank())));
      CMatrix both(n, b.cols() + c.cols());
      both << b, c;
      p = Projector::from_orthonormal_basis(both);
    }
    const Projector split = join(meet(p, q), meet(p, ortho(q)));
    EXPECT_EQ(commutes(p, q), approx_equal(p, split)) << "trial " << trial;
  }
}

TEST(Sasaki, Examples) {
  Rng rng(6);
  const Projector p = random_projector(rng, 4, 2);
  const Projector q = random_projector(rng, 4, 3);
  EXPECT_TRUE(sasaki_implies(p, p).is_identity());
  EXPECT_TRUE(approx_equal(sasaki_implies(Projector::identity(4), q), q));
  const Projector z_hi = z_up();
  const Projector x_hi = x_up();
  const Projector got = sasaki_implies(z_hi, x_hi);
  EXPECT_LE((got.matrix() - sasaki_oracle(z_hi.matrix(), x_hi.matrix())).norm(), 1e-8);
  // P ^ Q = 0 here, so the arrow collapses to P-perp.
  EXPECT_TRUE(approx_equal(got, ortho(z_hi)));
}

TEST(Sasaki, OracleOnRandomQubitPairs) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Projector p = random_projector(rng, 2);
    const Projector q = random_projector(rng, 2);
    const double overlap = (p.matrix() * q.matrix()).trace().real();
    if (p.rank() == 1 && q.rank() == 1 && overlap > 0.9) continue;
    EXPECT_LE((sasaki_implies(p, q).matrix() - sasaki_oracle(p.matrix(), q.matrix())).norm(), 1e-8);
  }
}

TEST(LogicalEquiv, SymmetricAndReflexive) {
  Rng rng(8);
  const Projector p = random_projector(rng, 4, 2);
  const Projector q = random_projector(rng, 4, 2);
  EXPECT_TRUE(logical_equiv(p, p).is_identity());
  EXPECT_TRUE(approx_equal(logical_equiv(p, q), logical_equiv(q, p)));
}

TEST(Leq, Examples) {
  Rng rng(9);
  const Projector p = random_projector(rng, 5, 3);
  const Projector q = random_projector(rng, 5, 4);
  EXPECT_TRUE(leq(Projector::zero(5), q));
  EXPECT_TRUE(leq(meet(p, q), p));
  EXPECT_FALSE(leq(z_up(), x_up()));
}

TEST(LatticeLaws, ComplementationProperties) {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.integer(1, 8);
    const Projector q = random_projector(rng, n);
    const Projector p = meet(q, random_projector(rng, n, rng.integer(static_cast<int>(n - q.rank()), static_cast<int>(n))));
    ASSERT_TRUE(leq(p, q));
    EXPECT_TRUE(leq(ortho(q), ortho(p)));
    EXPECT_EQ(distance(ortho(ortho(q)), q), 0.0);
    EXPECT_TRUE(join(q, ortho(q)).is_identity());
    EXPECT_TRUE(meet(q, ortho(q)).is_zero());
    EXPECT_LE(distance(join(p, meet(ortho(p), q)), q), 1e-8);
  }
}

TEST(LatticeLaws, PauliDistributivityFails) {
  const Projector p = z_up();
  const Projector q = x_up();
  const Projector r = ortho(x_up());
  const double gap = distance(meet(p, join(q, r)), join(meet(p, q), meet(p, r)));
  EXPECT_GT(gap, 0.1);
}

TEST(LatticeLaws, EmptyListsAndShortcuts) {
  std::vector<Projector> none;
  EXPECT_TRUE(meet_all(none, 3).is_identity());
  EXPECT_TRUE(join_all(none, 3).is_zero());
  EXPECT_TRUE(meet(Projector::zero(2), x_up()).is_zero());
}

TEST(Meet, NearlyAlignedLinesMeetInZero) {
  const double theta = 1e-6;
  CVector a(3), b(3);
  a << 1.0, 0.0, 0.0;
  b << std::cos(theta), std::sin(theta), 0.0;
  const Projector p = Projector::from_orthonormal_basis(a);
  const Projector q = Projector::from_orthonormal_basis(b);
  EXPECT_TRUE(meet(p, q).is_zero());
  EXPECT_EQ(join(p, q).rank(), 2);
}
