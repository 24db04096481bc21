#include "qlogic/evaluator.hpp"

#include <algorithm>
#include <functional>

#include "qlogic/error.hpp"
#include "qlogic/lattice.hpp"

namespace qlogic {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

}  // namespace

void ObservableRegistry::add(Observable x) {
  const std::string name = x.name();
  add(name, std::move(x));
}

void ObservableRegistry::add(const std::string& name, Observable x) {
  if (x.dim() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "observable " + name + " has dimension " + std::to_string(x.dim()) +
                                                  ", registry has " + std::to_string(dim_));
  }
  items_.insert_or_assign(name, x.renamed(name));
}

const Observable& ObservableRegistry::get(const std::string& name) const {
  auto it = items_.find(name);
  if (it == items_.end()) throw Error(ErrorKind::UnknownObservable, "unknown observable '" + name + "'");
  return it->second;
}

std::vector<std::string> ObservableRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : items_) out.push_back(k);
  return out;
}

std::vector<Observable> ObservableRegistry::resolve(const Prop& p) const {
  std::vector<Observable> out;
  for (const std::string& n : mentioned_observables(p)) out.push_back(get(n));
  return out;
}

Projector truth_value(const Prop& p, const ObservableRegistry& reg, const Tolerance& tol) {
  return std::visit(
      Overload{
          [&](const LeqAtom& a) { return threshold_projector(reg.get(a.obs), a.value, tol); },
          [&](const EqConstAtom& a) { return point_projector(reg.get(a.obs), a.value, tol); },
          [&](const EqObsAtom& a) { return equality_projector(reg.get(a.lhs), reg.get(a.rhs), tol); },
          [&](const ComAtom& a) {
            std::vector<Observable> xs;
            for (const std::string& n : a.obs) xs.push_back(reg.get(n));
            return com_observables(xs, tol);
          },
          [&](const VarRef& v) -> Projector {
            throw Error(ErrorKind::UnboundVariable, "variable '" + v.name + "' has no truth value");
          },
          [&](const NotNode& n) { return ortho(truth_value(*n.child, reg, tol)); },
          [&](const AndNode& n) { return meet(truth_value(*n.left, reg, tol), truth_value(*n.right, reg, tol), tol); },
          [&](const OrNode& n) { return join(truth_value(*n.left, reg, tol), truth_value(*n.right, reg, tol), tol); },
      },
      p.node);
}

bool is_standard(const Prop& p, const ObservableRegistry& reg, const Tolerance& tol) {
  const std::vector<Observable> xs = reg.resolve(p);
  return pairwise_commuting(xs, tol);
}

bool is_contextually_wellformed(const Prop& p, const ObservableRegistry& reg, const DensityState& rho,
                                const Tolerance& tol) {
  const std::vector<Observable> xs = reg.resolve(p);
  if (xs.empty()) return true;
  return simultaneously_determinate(xs, rho, tol);
}

double probability(const Prop& p, const ObservableRegistry& reg, const DensityState& rho, const Tolerance& tol) {
  return probability(truth_value(p, reg, tol), rho);
}

bool holds(const Prop& p, const ObservableRegistry& reg, const DensityState& rho, const Tolerance& tol) {
  return probability(p, reg, rho, tol) >= 1.0 - tol.assert_tol;
}

PropPtr instantiate(const Prop& skeleton, const std::map<std::string, PropPtr>& binding) {
  return std::visit(
      Overload{
          [&](const VarRef& v) -> PropPtr {
            auto it = binding.find(v.name);
            if (it == binding.end()) throw Error(ErrorKind::UnboundVariable, "variable '" + v.name + "' is unbound");
            return it->second;
          },
          [&](const NotNode& n) { return make_not(instantiate(*n.child, binding)); },
          [&](const AndNode& n) { return make_and(instantiate(*n.left, binding), instantiate(*n.right, binding)); },
          [&](const OrNode& n) { return make_or(instantiate(*n.left, binding), instantiate(*n.right, binding)); },
          [&](const auto&) { return std::make_shared<const Prop>(skeleton); },
      },
      skeleton.node);
}

namespace {

bool classical_value(const Prop& p, const std::map<std::string, bool>& assignment) {
  return std::visit(
      Overload{
          [&](const VarRef& v) { return assignment.at(v.name); },
          [&](const NotNode& n) { return !classical_value(*n.child, assignment); },
          [&](const AndNode& n) { return classical_value(*n.left, assignment) && classical_value(*n.right, assignment); },
          [&](const OrNode& n) { return classical_value(*n.left, assignment) || classical_value(*n.right, assignment); },
          [&](const auto&) -> bool {
            throw Error(ErrorKind::SyntaxError, "skeleton contains an observational atom");
          },
      },
      p.node);
}

}  // namespace

bool is_classical_tautology(const Prop& skeleton) {
  const std::vector<std::string> vars = mentioned_variables(skeleton);
  if (vars.size() > 20) throw Error(ErrorKind::FamilyTooLarge, "skeleton has more than 20 variables");
  std::map<std::string, bool> assignment;
  for (std::size_t mask = 0; mask < (std::size_t{1} << vars.size()); ++mask) {
    for (std::size_t i = 0; i < vars.size(); ++i) assignment[vars[i]] = (mask >> i) & 1U;
    if (!classical_value(skeleton, assignment)) return false;
  }
  return true;
}

Report tautology_transfer_check(const Prop& skeleton, const std::map<std::string, PropPtr>& binding,
                                const ObservableRegistry& reg, const Tolerance& tol) {
  if (!is_classical_tautology(skeleton)) {
    throw Error(ErrorKind::NotATautology, "'" + to_string(skeleton) + "' is not a classical tautology");
  }
  const PropPtr instance = instantiate(skeleton, binding);
  const std::vector<Observable> xs = reg.resolve(*instance);
  const Projector c = xs.empty() ? Projector::identity(reg.dim()) : com_observables(xs, tol);
  const Projector t = truth_value(*instance, reg, tol);
  const double gap = (t.matrix() * c.matrix() - c.matrix()).norm();
  Report r;
  r.title = "tautology transfer";
  r.add("com <= [[phi]]", gap <= tol.assert_tol, gap,
        "com rank " + std::to_string(c.rank()) + ", truth rank " + std::to_string(t.rank()));
  r.notes.push_back(to_string(*instance));
  return r;
}

}  // namespace qlogic
