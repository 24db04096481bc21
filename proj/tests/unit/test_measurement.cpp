#include <gtest/gtest.h>

#include <cmath>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/measurement.hpp"
#include "qlogic/random.hpp"
#include "support.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

// System qubit controls a CNOT onto a probe prepared in |0>, read by Z.
MeasuringProcess cnot_model() {
  MeasuringProcess mp;
  mp.dim_h = 2;
  mp.sigma = DensityState::pure(basis_vector(2, 0));
  mp.u = cnot();
  mp.meter = Observable::decompose("M", pauli_z());
  return mp;
}

MeasuringProcess trivial_model(const DensityState& sigma) {
  MeasuringProcess mp;
  mp.dim_h = 2;
  mp.sigma = sigma;
  mp.u = identity(2 * sigma.dim());
  mp.meter = Observable::decompose("M", diag({1, 2, 2}).topLeftCorner(sigma.dim(), sigma.dim()));
  return mp;
}

const Observable& z_obs() {
  static const Observable z = Observable::decompose("Z", pauli_z());
  return z;
}
const Observable& x_obs() {
  static const Observable x = Observable::decompose("X", pauli_x());
  return x;
}

POVM noisy_z(double eps) {
  POVM p;
  p.outcomes = {-1.0, 1.0};
  p.elements = {(1 - eps) * diag({0, 1}) + eps * 0.5 * identity(2), (1 - eps) * diag({1, 0}) + eps * 0.5 * identity(2)};
  return p;
}

}  // namespace

TEST(Povm, Validation) {
  POVM ok = noisy_z(0.1);
  EXPECT_NO_THROW(ok.validate());
  POVM short_sum = ok;
  short_sum.elements[0] *= 0.5;
  EXPECT_THROW(short_sum.validate(), Error);
  POVM negative;
  negative.outcomes = {0.0, 1.0};
  negative.elements = {diag({1.5, 0.5}), diag({-0.5, 0.5})};
  EXPECT_THROW(negative.validate(), Error);
  POVM repeated = ok;
  repeated.outcomes = {1.0, 1.0};
  EXPECT_THROW(repeated.validate(), Error);
}

TEST(PovmOfProcess, Examples) {
  const POVM cn = povm_of_process(cnot_model());
  EXPECT_LE((cn.element(1.0) - diag({1, 0})).norm(), 1e-12);
  EXPECT_LE((cn.element(-1.0) - diag({0, 1})).norm(), 1e-12);

  const POVM flat = povm_of_process(trivial_model(DensityState::pure(ket({0.6, 0.8}))));
  EXPECT_LE((flat.element(1.0) - 0.36 * identity(2)).norm(), 1e-12);
  EXPECT_LE((flat.element(2.0) - 0.64 * identity(2)).norm(), 1e-12);

  // Maximally mixed probe on C^3 with meter diag(1, 2, 2): weights 1/3, 2/3.
  const POVM mixed = povm_of_process(trivial_model(DensityState::maximally_mixed(3)));
  EXPECT_LE((mixed.element(1.0) - identity(2) / 3.0).norm(), 1e-12);
  EXPECT_LE((mixed.element(2.0) - 2.0 * identity(2) / 3.0).norm(), 1e-12);
}

TEST(PovmOfProcess, RejectsBadProcesses) {
  MeasuringProcess mp = cnot_model();
  mp.u(0, 0) = 2.0;
  EXPECT_THROW(povm_of_process(mp), Error);
  mp = cnot_model();
  mp.dim_h = 3;
  EXPECT_THROW(povm_of_process(mp), Error);
}

TEST(PovmOfProcess, SystemAlgebraMembership) {
  MeasuringProcess mp = cnot_model();
  const Projector diagonal[] = {Projector::from_matrix(diag({1, 0}))};
  mp.system_algebra = MatrixAlgebra::from_projectors(diagonal, 2);
  EXPECT_NO_THROW(povm_of_process(mp));
  const Projector plus[] = {x_up()};
  mp.system_algebra = MatrixAlgebra::from_projectors(plus, 2);
  EXPECT_THROW(povm_of_process(mp), Error);
}

TEST(OutputDistribution, Examples) {
  const auto zero = output_distribution(cnot_model(), DensityState::pure(basis_vector(2, 0)));
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_EQ(zero[0].outcome, -1.0);
  EXPECT_NEAR(zero[0].probability, 0.0, 1e-12);
  EXPECT_NEAR(zero[1].probability, 1.0, 1e-12);
  const double s = 1 / std::sqrt(2.0);
  const auto plus = output_distribution(cnot_model(), DensityState::pure(ket({s, s})));
  EXPECT_NEAR(plus[0].probability, 0.5, 1e-12);
  EXPECT_NEAR(plus[1].probability, 0.5, 1e-12);

  Rng rng(71);
  const MeasuringProcess flat = trivial_model(DensityState::pure(ket({0.6, 0.8})));
  for (int i = 0; i < 5; ++i) {
    const auto d = output_distribution(flat, random_state(rng, 2));
    EXPECT_NEAR(d[0].probability, 0.36, 1e-12);
  }
}

TEST(MeasurementPredicates, CnotMeasuresZ) {
  Rng rng(72);
  for (int i = 0; i < 10; ++i) {
    const DensityState rho = random_state(rng, 2);
    EXPECT_TRUE(measures_in_state(cnot_model(), z_obs(), rho));
    EXPECT_TRUE(weakly_measures(cnot_model(), z_obs(), rho));
    EXPECT_TRUE(satisfies_bsf(cnot_model(), z_obs(), rho));
  }
  const DensityState up = DensityState::pure(basis_vector(2, 0));
  EXPECT_FALSE(measures_in_state(cnot_model(), x_obs(), up));
  EXPECT_FALSE(weakly_measures(cnot_model(), x_obs(), up));
  EXPECT_FALSE(satisfies_bsf(cnot_model(), x_obs(), up));
  EXPECT_TRUE(mob_battery(cnot_model(), z_obs(), up).all_passed());
  EXPECT_TRUE(mob_battery(cnot_model(), x_obs(), up).all_failed());
}

TEST(MeasurementPredicates, ScalarObservable) {
  // The trivial model with a single meter value measures the matching
  // scalar in every state.
  MeasuringProcess mp = trivial_model(DensityState::pure(basis_vector(2, 0)));
  mp.meter = Observable::decompose("M", 3.0 * identity(2));
  const Observable three = Observable::decompose("A", 3.0 * identity(2));
  Rng rng(73);
  EXPECT_TRUE(mob_battery(mp, three, random_state(rng, 2)).all_passed());
  EXPECT_TRUE(mob_battery(mp, Observable::decompose("B", 5.0 * identity(2)), random_state(rng, 2)).all_failed());
}

TEST(MeasurementPredicates, StateDependentModelsAreCoherent) {
  Rng rng(74);
  int positive = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Observable a = random_observable(rng, 3, "A", 2);
    // Pi agrees with E^A on an A-invariant subspace P and is noise on 1 - P.
    const Projector p = Projector::from_orthonormal_basis(a.projectors()[0].basis().col(0));
    POVM povm;
    povm.outcomes = a.spectrum();
    const std::vector<CMatrix> noise = random_povm_elements(rng, 3, static_cast<Index>(a.size()));
    const CMatrix q = ortho(p).matrix();
    for (std::size_t k = 0; k < a.size(); ++k) {
      povm.elements.push_back(a.projectors()[k].matrix() * p.matrix() + q * noise[k] * q);
    }
    const MeasuringProcess mp = naimark_process(povm);
    const DensityState rho = rng.coin() ? random_state_in(rng, p) : random_state(rng, 3);
    if (mob_battery(mp, a, rho).verdict()) ++positive;
  }
  EXPECT_GT(positive, 3);
  EXPECT_LT(positive, 27);
}

TEST(GlobalMeasurement, Examples) {
  Rng rng(75);
  const auto sample = state_sample(2, rng);
  EXPECT_TRUE(global_measurement_check(cnot_model(), z_obs(), sample).all_passed());
  EXPECT_TRUE(global_measurement_check(naimark_process(noisy_z(0.1)), z_obs(), sample).all_failed());
  MeasuringProcess mp = trivial_model(DensityState::pure(basis_vector(2, 0)));
  mp.meter = Observable::decompose("M", 3.0 * identity(2));
  EXPECT_TRUE(global_measurement_check(mp, Observable::decompose("A", 3.0 * identity(2)), sample).all_passed());
}

TEST(Naimark, Examples) {
  POVM z;
  z.outcomes = {-1.0, 1.0};
  z.elements = {diag({0, 1}), diag({1, 0})};
  const MeasuringProcess mz = naimark_process(z);
  Rng rng(76);
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(measures_in_state(mz, z_obs(), random_state(rng, 2)));

  POVM coin;
  coin.outcomes = {0.0, 1.0};
  coin.elements = {0.5 * identity(2), 0.5 * identity(2)};
  const MeasuringProcess mc = naimark_process(coin);
  for (int i = 0; i < 5; ++i) {
    const auto d = output_distribution(mc, random_state(rng, 2));
    EXPECT_NEAR(d[0].probability, 0.5, 1e-12);
    EXPECT_NEAR(d[1].probability, 0.5, 1e-12);
  }
}

TEST(Naimark, RoundTripProperty) {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = rng.integer(1, 4);
    const Index m = rng.integer(1, 4);
    POVM p;
    p.elements = random_povm_elements(rng, n, m);
    for (Index k = 0; k < m; ++k) p.outcomes.push_back(static_cast<double>(k) - 1.5);
    const MeasuringProcess mp = naimark_process(p);
    EXPECT_TRUE(is_unitary(mp.u));
    const POVM back = povm_of_process(mp);
    for (std::size_t k = 0; k < p.size(); ++k) EXPECT_LE((back.element(p.outcomes[k]) - p.elements[k]).norm(), 1e-8);
  }
  POVM broken = noisy_z(0.1);
  broken.elements[1] *= 2.0;
  EXPECT_THROW(naimark_process(broken), Error);
}

TEST(MeterFunction, PushforwardCovariance) {
  Rng rng(78);
  POVM p;
  p.elements = random_povm_elements(rng, 3, 4);
  p.outcomes = {-2.0, -1.0, 1.0, 2.0};
  const MeasuringProcess mp = naimark_process(p);
  const MeasuringProcess sq = with_meter_function(mp, [](double v) -> std::optional<double> { return v * v; }, "M^2");
  const POVM pushed = povm_of_process(sq);
  ASSERT_EQ(pushed.size(), 2u);
  EXPECT_LE((pushed.element(1.0) - p.elements[1] - p.elements[2]).norm(), 1e-8);
  EXPECT_LE((pushed.element(4.0) - p.elements[0] - p.elements[3]).norm(), 1e-8);
}

TEST(SimultaneousMeasurability, Examples) {
  const Observable a = Observable::decompose("A", kron(pauli_z(), identity(2)));
  const Observable b = Observable::decompose("B", kron(identity(2), pauli_z()));
  const SimultaneousMeasurement sm = simultaneous_measurability(a, b, DensityState::maximally_mixed(4));
  EXPECT_TRUE(sm.report.all_passed()) << sm.report.to_text();
  ASSERT_TRUE(sm.joint.has_value());
  ASSERT_TRUE(sm.witness.has_value());
  EXPECT_EQ(sm.joint->size(), 4u);

  const SimultaneousMeasurement zx = simultaneous_measurability(z_obs(), x_obs(), DensityState::maximally_mixed(2));
  EXPECT_FALSE(zx.report.all_passed());
  EXPECT_FALSE(zx.witness.has_value());
  EXPECT_FALSE(zx.report.notes.empty());
}

TEST(SimultaneousMeasurability, BlockDeterminatePairs) {
  Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    Projector block = Projector::zero(1);
    const std::vector<Observable> xs = block_commuting_family(rng, 2, 2, 2, &block);
    const SimultaneousMeasurement sm = simultaneous_measurability(xs[0], xs[1], random_state_in(rng, block));
    EXPECT_TRUE(sm.report.all_passed()) << sm.report.to_text();
  }
}
