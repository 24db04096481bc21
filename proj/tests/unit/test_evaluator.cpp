#include <gtest/gtest.h>

#include "qlogic/error.hpp"
#include "qlogic/evaluator.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/random.hpp"
#include "support.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

ObservableRegistry pauli_registry() {
  ObservableRegistry reg(2);
  reg.add(Observable::decompose("Z", pauli_z()));
  reg.add(Observable::decompose("X", pauli_x()));
  reg.add(Observable::decompose("D", diag({1, 2})));
  return reg;
}

ObservableRegistry bell_registry() {
  ObservableRegistry reg(4);
  reg.add(Observable::decompose("X", kron(pauli_z(), identity(2))));
  reg.add(Observable::decompose("Y", kron(identity(2), pauli_z())));
  return reg;
}

Projector eval(const std::string& text, const ObservableRegistry& reg) {
  return truth_value(*parse_proposition(text), reg);
}

}  // namespace

TEST(Registry, Resolution) {
  ObservableRegistry reg = pauli_registry();
  EXPECT_TRUE(reg.has("Z"));
  EXPECT_THROW(reg.get("Q"), Error);
  EXPECT_THROW(reg.add(Observable::decompose("W", identity(3))), Error);
  reg.add("Zed", Observable::decompose("Z", pauli_z()));
  EXPECT_EQ(reg.get("Zed").name(), "Zed");
  EXPECT_EQ(reg.names(), (std::vector<std::string>{"D", "X", "Z", "Zed"}));
}

TEST(TruthValue, Examples) {
  const ObservableRegistry reg = pauli_registry();
  EXPECT_LE((eval("Z <= 0", reg).matrix() - diag({0, 1})).norm(), 1e-12);
  EXPECT_TRUE(eval("Z <= 1", reg).is_identity());
  EXPECT_TRUE(eval("Z <= 7.5", reg).is_identity());
  EXPECT_TRUE(eval("com(Z, X)", reg).is_zero());
  EXPECT_TRUE(eval("com(Z, D)", reg).is_identity());
  EXPECT_LE((eval("Z == 1", reg).matrix() - diag({1, 0})).norm(), 1e-12);
  EXPECT_TRUE(eval("Z == 0.5", reg).is_zero());
  EXPECT_TRUE(eval("Z = X", reg).is_zero());
  EXPECT_TRUE(eval("Z = Z", reg).is_identity());
  EXPECT_TRUE(eval("Z <= 0 or not Z <= 0", reg).is_identity());
  EXPECT_TRUE(eval("X <= 0 and not X <= 0", reg).is_zero());
  // Z-down or X-up spans the plane.
  EXPECT_TRUE(eval("Z <= 0 or X == 1", reg).is_identity());
  EXPECT_THROW(eval("Q <= 1", reg), Error);
  EXPECT_THROW(truth_value(*parse_skeleton("a or b"), reg), Error);
}

TEST(TruthValue, LiteralSnapsToSpectrum) {
  const ObservableRegistry reg = pauli_registry();
  EXPECT_LE(distance(eval("Z == 1.000000000001", reg), eval("Z == 1", reg)), 1e-12);
  EXPECT_LE(distance(eval("Z <= -1.000000000001", reg), eval("Z <= -1", reg)), 1e-12);
}

TEST(TruthValue, OrIsDeMorganExpansion) {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    ObservableRegistry reg(4);
    reg.add(random_observable(rng, 4, "A"));
    reg.add(random_observable(rng, 4, "B"));
    const double a = reg.get("A").spectrum().front();
    const double b = reg.get("B").spectrum().front();
    const PropPtr x = make_leq("A", a);
    const PropPtr y = make_eq_const("B", b);
    const Projector lhs = truth_value(*make_or(x, y), reg);
    const Projector rhs = ortho(meet(ortho(truth_value(*x, reg)), ortho(truth_value(*y, reg))));
    EXPECT_EQ(distance(lhs, rhs), 0.0);
    EXPECT_LE(distance(truth_value(*make_not(make_not(x)), reg), truth_value(*x, reg)), 1e-8);
  }
}

TEST(TruthValue, StandardPropositionsAreBoolean) {
  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix u = random_unitary(rng, 5);
    ObservableRegistry reg(5);
    for (const char* name : {"A", "B", "C"}) reg.add(observable_in_basis(rng, u, name));
    auto atom = [&](const char* name) {
      const Observable& x = reg.get(name);
      return make_leq(name, x.spectrum()[static_cast<std::size_t>(rng.integer(0, static_cast<int>(x.size()) - 1))]);
    };
    const PropPtr p = atom("A"), q = atom("B"), r = atom("C");
    EXPECT_TRUE(is_standard(*make_and(p, make_or(q, r)), reg));
    const Projector lhs = truth_value(*make_and(p, make_or(q, r)), reg);
    const Projector rhs = truth_value(*make_or(make_and(p, q), make_and(p, r)), reg);
    EXPECT_LE(distance(lhs, rhs), 1e-8);
  }
}

TEST(Standardness, Examples) {
  const ObservableRegistry reg = pauli_registry();
  EXPECT_TRUE(is_standard(*parse_proposition("Z <= 0 and Z <= 1"), reg));
  EXPECT_FALSE(is_standard(*parse_proposition("Z <= 0 and X <= 0"), reg));
  EXPECT_TRUE(is_standard(*parse_proposition("Z <= 0 or D == 2"), reg));
  EXPECT_THROW(is_standard(*parse_proposition("Q <= 0"), reg), Error);
}

TEST(ContextualWellFormedness, Examples) {
  const ObservableRegistry reg = pauli_registry();
  const PropPtr zx = parse_proposition("Z = X");
  EXPECT_FALSE(is_contextually_wellformed(*zx, reg, DensityState::pure(basis_vector(2, 0))));
  EXPECT_FALSE(is_contextually_wellformed(*zx, reg, DensityState::maximally_mixed(2)));
  EXPECT_TRUE(is_contextually_wellformed(*parse_proposition("Z <= 0 and D == 1"), reg, DensityState::maximally_mixed(2)));
  const ObservableRegistry pair = bell_registry();
  EXPECT_TRUE(is_contextually_wellformed(*parse_proposition("X = Y"), pair, DensityState::pure(bell())));
}

TEST(Probability, Examples) {
  const ObservableRegistry reg = pauli_registry();
  EXPECT_NEAR(probability(*parse_proposition("Z <= 0"), reg, DensityState::pure(basis_vector(2, 0))), 0.0, 1e-12);
  EXPECT_NEAR(probability(*parse_proposition("Z <= 5"), reg, DensityState::pure(ket({0.6, 0.8}))), 1.0, 1e-12);
  EXPECT_NEAR(probability(*parse_proposition("X == 1"), reg, DensityState::pure(basis_vector(2, 0))), 0.5, 1e-12);
  const ObservableRegistry pair = bell_registry();
  EXPECT_NEAR(probability(*parse_proposition("X = Y"), pair, DensityState::pure(bell())), 1.0, 1e-10);
  EXPECT_TRUE(holds(*parse_proposition("X = Y"), pair, DensityState::pure(bell())));
  EXPECT_FALSE(holds(*parse_proposition("X = Y"), pair, DensityState::maximally_mixed(4)));
}

TEST(Tautology, TruthTableOracle) {
  EXPECT_TRUE(is_classical_tautology(*parse_skeleton("v or not v")));
  EXPECT_TRUE(is_classical_tautology(*parse_skeleton("not (a and (b or c)) or ((a and b) or (a and c))")));
  EXPECT_FALSE(is_classical_tautology(*parse_skeleton("a or b")));
  EXPECT_FALSE(is_classical_tautology(*parse_skeleton("a and not a")));
}

TEST(Tautology, Instantiate) {
  const std::map<std::string, PropPtr> binding{{"v", make_leq("Z", 0)}};
  const PropPtr p = instantiate(*parse_skeleton("v or not v"), binding);
  EXPECT_TRUE(same_structure(*p, *parse_proposition("Z <= 0 or not Z <= 0")));
  EXPECT_THROW(instantiate(*parse_skeleton("w"), binding), Error);
}

TEST(TautologyTransfer, Examples) {
  const ObservableRegistry reg = pauli_registry();
  const PropPtr dist = parse_skeleton("not (a and (b or c)) or ((a and b) or (a and c))");
  const std::map<std::string, PropPtr> paulis{
      {"a", make_leq("Z", -1)}, {"b", make_leq("X", -1)}, {"c", make_not(make_leq("X", -1))}};
  const Report r = tautology_transfer_check(*dist, paulis, reg);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
  // Distributivity fails for these atoms, so [[phi]] is not the identity.
  EXPECT_FALSE(truth_value(*instantiate(*dist, paulis), reg).is_identity());

  const std::map<std::string, PropPtr> commuting{
      {"a", make_leq("Z", -1)}, {"b", make_eq_const("D", 1)}, {"c", make_leq("D", 1.5)}};
  EXPECT_TRUE(tautology_transfer_check(*dist, commuting, reg).all_passed());
  EXPECT_TRUE(truth_value(*instantiate(*dist, commuting), reg).is_identity());

  const std::map<std::string, PropPtr> v{{"v", make_eq_obs("Z", "X")}};
  EXPECT_TRUE(tautology_transfer_check(*parse_skeleton("v or not v"), v, reg).all_passed());
  try {
    tautology_transfer_check(*parse_skeleton("v"), v, reg);
    FAIL() << "expected NotATautology";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotATautology);
  }
}
