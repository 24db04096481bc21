#include <gtest/gtest.h>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/observable.hpp"
#include "qlogic/random.hpp"
#include "support.hpp"

using namespace qlogic;
using namespace qlogic::testing;

TEST(BorelSet, CanonicalFormAndAlgebra) {
  const BorelSet a = BorelSet::half_open(0, 1).unite(BorelSet::half_open(1, 2));
  ASSERT_EQ(a.components().size(), 1U);
  EXPECT_EQ(a.components()[0].lo, 0.0);
  EXPECT_EQ(a.components()[0].hi, 2.0);
  EXPECT_FALSE(a.contains(0.0));
  EXPECT_TRUE(a.contains(2.0));
  const BorelSet c = a.complement();
  EXPECT_TRUE(c.contains(0.0));
  EXPECT_FALSE(c.contains(2.0));
  EXPECT_TRUE(c.contains(-5.0));
  EXPECT_TRUE(c.contains(7.0));
  EXPECT_TRUE(a.intersect(c).is_empty());
  EXPECT_EQ(a.unite(c).components().size(), 1U);
  EXPECT_TRUE(BorelSet::point(3).complement().complement().contains(3));
  EXPECT_FALSE(BorelSet::point(3).complement().contains(3));
  EXPECT_TRUE(BorelSet::at_most(1).contains(1.0 + 1e-9, 1e-8));
  EXPECT_FALSE(BorelSet::greater_than(1).contains(1.0 + 1e-9, 1e-8));
}

TEST(Decompose, Examples) {
  const Observable x = Observable::decompose("A", diag({1, 1, 2}));
  ASSERT_EQ(x.size(), 2U);
  EXPECT_NEAR(x.spectrum()[0], 1.0, 1e-14);
  EXPECT_LE((x.projectors()[0].matrix() - diag({1, 1, 0})).norm(), 1e-13);
  EXPECT_LE((x.projectors()[1].matrix() - diag({0, 0, 1})).norm(), 1e-13);

  const Observable px = Observable::decompose("X", pauli_x());
  CMatrix minus(2, 2), plus(2, 2);
  minus << 0.5, -0.5, -0.5, 0.5;
  plus << 0.5, 0.5, 0.5, 0.5;
  EXPECT_LE((px.projectors()[0].matrix() - minus).norm(), 1e-13);
  EXPECT_LE((px.projectors()[1].matrix() - plus).norm(), 1e-13);

  const Observable s = Observable::decompose("S", 3.0 * identity(3));
  ASSERT_EQ(s.size(), 1U);
  EXPECT_TRUE(s.projectors()[0].is_identity());

  CMatrix bad(2, 2);
  bad << 0, 1, 2, 0;
  EXPECT_THROW(Observable::decompose("B", bad), Error);
}

TEST(SpectralProjector, Examples) {
  Rng rng(20);
  const Observable x = random_observable(rng, 4, "X");
  EXPECT_TRUE(spectral_projector(x, BorelSet::all()).is_identity());
  const Observable px = Observable::decompose("X", pauli_x());
  CMatrix minus(2, 2);
  minus << 0.5, -0.5, -0.5, 0.5;
  EXPECT_LE((spectral_projector(px, BorelSet::at_most(0)).matrix() - minus).norm(), 1e-13);
  EXPECT_TRUE(point_projector(px, 0.3).is_zero());
  EXPECT_TRUE(spectral_projector(px, BorelSet::point(0.3)).is_zero());
  // literal snapping
  EXPECT_EQ(point_projector(px, 1.0 + 1e-10).rank(), 1);
}

TEST(ApplyFunction, Examples) {
  Rng rng(21);
  const Observable x = random_observable(rng, 4, "X");
  EXPECT_LE((apply_function(x, [](double v) { return std::optional<double>(v); }) - x.matrix()).norm(), 1e-12);
  const BorelSet d = BorelSet::half_open(-1, 1);
  const CMatrix chi = apply_function(x, [&](double v) { return std::optional<double>(d.contains(v) ? 1.0 : 0.0); });
  EXPECT_LE((chi - spectral_projector(x, d).matrix()).norm(), 1e-12);
  const Observable z = Observable::decompose("Z", pauli_z());
  EXPECT_LE((apply_function(z, [](double v) { return std::optional<double>(v * v); }) - identity(2)).norm(), 1e-13);
  try {
    apply_function(z, [](double v) { return v > 0 ? std::optional<double>(1.0) : std::nullopt; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedAtSpectralPoint);
  }
}

TEST(Delta, Examples) {
  EXPECT_DOUBLE_EQ(delta(Observable::decompose("A", diag({0, 1}))), 0.5);
  EXPECT_DOUBLE_EQ(delta(Observable::decompose("B", diag({0, 10}))), 1.0);
  EXPECT_DOUBLE_EQ(delta(Observable::decompose("C", 2.0 * identity(3))), 1.0);
}

TEST(Embedding, FirstSecondAndHeisenberg) {
  const Observable z = Observable::decompose("Z", pauli_z());
  const Observable zi = embed_first(z, 2);
  ASSERT_EQ(zi.size(), 2U);
  EXPECT_DOUBLE_EQ(zi.spectrum()[0], -1.0);
  EXPECT_LE((zi.projectors()[0].matrix() - kron(z.projectors()[0].matrix(), identity(2))).norm(), 1e-13);
  EXPECT_LE((zi.matrix() - kron(pauli_z(), identity(2))).norm(), 1e-13);

  const Observable iz = embed_second(z, 2);
  const Observable same = heisenberg(iz, identity(4));
  EXPECT_LE((same.matrix() - iz.matrix()).norm(), 1e-13);

  const Observable moved = heisenberg(iz, cnot());
  const CMatrix oracle = cnot().adjoint() * kron(identity(2), pauli_z()) * cnot();
  EXPECT_LE((moved.matrix() - oracle).norm(), 1e-12);
  EXPECT_LE((oracle - kron(pauli_z(), pauli_z())).norm(), 1e-12);
  ASSERT_EQ(moved.size(), 2U);
  EXPECT_DOUBLE_EQ(moved.spectrum()[1], 1.0);
  EXPECT_THROW(heisenberg(iz, 2.0 * identity(4)), Error);
}

TEST(SpectralProperties, ResolutionOfIdentity) {
  Rng rng(22);
  const Tolerance tol;
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.integer(1, 8);
    const Observable x = random_observable(rng, n, "X", rng.integer(1, 4));
    CMatrix sum = CMatrix::Zero(n, n);
    CMatrix rebuilt = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < x.size(); ++i) {
      sum += x.projectors()[i].matrix();
      rebuilt += x.spectrum()[i] * x.projectors()[i].matrix();
      for (std::size_t j = 0; j < x.size(); ++j) {
        const CMatrix prod = x.projectors()[i].matrix() * x.projectors()[j].matrix();
        const CMatrix want = i == j ? x.projectors()[i].matrix() : CMatrix::Zero(n, n);
        EXPECT_LE((prod - want).norm(), tol.assert_tol);
      }
      if (i > 0) EXPECT_GT(x.spectrum()[i] - x.spectrum()[i - 1], 0.5);
    }
    EXPECT_LE((sum - identity(n)).norm(), tol.assert_tol);
    EXPECT_LE((rebuilt - x.matrix()).norm(), tol.assert_tol * std::max(1.0, x.matrix().norm()));
  }
}

TEST(SpectralProperties, AdditivityOverRandomPartitions) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Observable x = random_observable(rng, rng.integer(1, 6), "X", 4);
    // Cut points at integers and half-integers so both kinds of boundary occur.
    const int pieces = rng.integer(1, 5);
    std::vector<double> cuts;
    for (int i = 0; i + 1 < pieces; ++i) cuts.push_back(rng.integer(-8, 8) / 2.0);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<BorelSet> parts;
    double lo = -std::numeric_limits<double>::infinity();
    for (double c : cuts) {
      parts.push_back(BorelSet::interval(Interval{lo, c, false, true}));
      lo = c;
    }
    parts.push_back(BorelSet::greater_than(lo));
    CMatrix sum = CMatrix::Zero(x.dim(), x.dim());
    BorelSet covered = BorelSet::empty();
    for (const BorelSet& part : parts) {
      sum += spectral_projector(x, part).matrix();
      covered = covered.unite(part);
    }
    EXPECT_LE((sum - identity(x.dim())).norm(), 1e-10);
    EXPECT_EQ(covered.components().size(), 1U);
    if (parts.size() >= 2) {
      const BorelSet two = parts[0].unite(parts[1]);
      const CMatrix lhs = spectral_projector(x, two).matrix();
      const CMatrix rhs = spectral_projector(x, parts[0]).matrix() + spectral_projector(x, parts[1]).matrix();
      EXPECT_LE((lhs - rhs).norm(), 1e-10);
    }
  }
}

TEST(SpectralProperties, CommutingFunctionalCalculus) {
  Rng rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = rng.integer(2, 6);
    const CMatrix u = random_unitary(rng, n);
    const Observable x = observable_in_basis(rng, u, "X");
    const Observable y = observable_in_basis(rng, u, "Y");
    const CMatrix fx = apply_function(x, [](double v) { return std::optional<double>(std::exp(v)); });
    const CMatrix gy = apply_function(y, [](double v) { return std::optional<double>(v * v * v - v); });
    EXPECT_LE(commutator(fx, gy).norm(), 1e-8 * std::max(1.0, fx.norm() * gy.norm()));
    EXPECT_TRUE(observables_commute(x, y));
  }
}

TEST(SpectralProperties, ThresholdIdentities) {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const Observable x = random_observable(rng, rng.integer(1, 6), "X", 4);
    const double s = rng.integer(-6, 5) / 2.0;
    const double t = s + rng.integer(1, 6) / 2.0;
    const Projector et = threshold_projector(x, t);
    EXPECT_LE(distance(et, spectral_projector(x, BorelSet::at_most(t))), 1e-12);
    const Projector above = spectral_projector(x, BorelSet::greater_than(t));
    EXPECT_LE(distance(above, ortho(et)), 1e-8);
    const Projector es = threshold_projector(x, s);
    const Projector window = spectral_projector(x, BorelSet::half_open(s, t));
    EXPECT_LE((window.matrix() - (et.matrix() - es.matrix())).norm(), 1e-8);
    EXPECT_LE(distance(window, meet(et, ortho(es))), 1e-8);
    const double spectral_point = x.spectrum()[static_cast<std::size_t>(rng.integer(0, static_cast<int>(x.size() - 1)))];
    const double d = delta(x);
    const Projector near = spectral_projector(x, BorelSet::interval(Interval{spectral_point - d, spectral_point + d, false, true}));
    EXPECT_LE(distance(near, point_projector(x, spectral_point)), 1e-8);
  }
}

TEST(MapObservable, GroupsByImage) {
  const Observable x = Observable::decompose("X", diag({-1, 0, 1}));
  const Observable sq = map_observable(x, [](double v) { return std::optional<double>(v * v); }, "X2");
  ASSERT_EQ(sq.size(), 2U);
  EXPECT_EQ(sq.projectors()[1].rank(), 2);
}

TEST(MergedSpectrum, SymmetricUnion) {
  const Observable a = Observable::decompose("A", diag({0, 1, 3}));
  const Observable b = Observable::decompose("B", diag({1, 2, 2}));
  const auto ab = merged_spectrum(a, b);
  const auto ba = merged_spectrum(b, a);
  ASSERT_EQ(ab.size(), 4U);
  EXPECT_EQ(ab, ba);
}
