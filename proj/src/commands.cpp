#include "qlogic/commands.hpp"

#include <cstdio>
#include <sstream>

#include "qlogic/lattice.hpp"
#include "qlogic/suites.hpp"

namespace qlogic {

namespace {

using ojson = nlohmann::ordered_json;

// 12 significant digits; adding 0.0 folds -0 into 0.
double num(double v) { return round_sig(v) + 0.0; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", num(v));
  return buf;
}

std::string fmt(cplx c) {
  const double im = num(c.imag());
  if (im == 0.0) return fmt(c.real());
  return fmt(c.real()) + (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

ojson complex_json(cplx c) { return ojson::array({num(c.real()), num(c.imag())}); }

ojson basis_json(const CMatrix& b) {
  ojson cols = ojson::array();
  for (Index c = 0; c < b.cols(); ++c) {
    ojson v = ojson::array();
    for (Index r = 0; r < b.rows(); ++r) v.push_back(complex_json(b(r, c)));
    cols.push_back(std::move(v));
  }
  return cols;
}

std::string basis_text(const CMatrix& b) {
  std::ostringstream os;
  for (Index c = 0; c < b.cols(); ++c) {
    os << "  (";
    for (Index r = 0; r < b.rows(); ++r) os << (r ? ", " : "") << fmt(b(r, c));
    os << ")\n";
  }
  return os.str();
}

ojson projector_json(const Projector& p) {
  ojson j;
  j["rank"] = p.rank();
  j["basis"] = basis_json(p.basis());
  return j;
}

std::vector<Observable> resolve(const Scenario& s, const std::vector<std::string>& names) {
  std::vector<Observable> xs;
  for (const std::string& n : names) xs.push_back(s.observable(n));
  return xs;
}

ojson names_json(const std::vector<std::string>& names) {
  ojson a = ojson::array();
  for (const std::string& n : names) a.push_back(n);
  return a;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out;
}

std::string distribution_text(const JointDistribution& d) {
  std::ostringstream os;
  os << "  " << joined(d.names) << "  probability\n";
  for (const auto& atom : d.atoms) {
    os << "  (";
    for (std::size_t i = 0; i < atom.values.size(); ++i) os << (i ? ", " : "") << fmt(atom.values[i]);
    os << ")  " << fmt(atom.probability) << '\n';
  }
  os << "  total " << fmt(d.total()) << '\n';
  return os.str();
}

}  // namespace

CommandOutput cmd_eval(const Scenario& s, const std::string& proposition, const Tolerance& tol) {
  const Prop& p = s.proposition(proposition);
  const Projector tv = truth_value(p, s.observables, tol);
  const bool standard = is_standard(p, s.observables, tol);
  CommandOutput out;
  out.json["command"] = "eval";
  out.json["proposition"] = proposition;
  out.json["text"] = s.proposition_text.at(proposition);
  out.json["dimension"] = s.dimension;
  out.json["truth_value"] = projector_json(tv);
  out.json["standard"] = standard;
  ojson states = ojson::object();
  std::ostringstream os;
  os << proposition << ": " << s.proposition_text.at(proposition) << '\n';
  os << "rank " << tv.rank() << " of " << s.dimension << '\n' << basis_text(tv.basis());
  os << "standard " << (standard ? "yes" : "no") << '\n';
  for (const auto& [name, rho] : s.states) {
    ojson one;
    const bool wellformed = is_contextually_wellformed(p, s.observables, rho, tol);
    const double pr = probability(p, s.observables, rho, tol);
    one["contextually_wellformed"] = wellformed;
    one["probability"] = num(pr);
    states[name] = std::move(one);
    os << "state " << name << ": contextually well-formed " << (wellformed ? "yes" : "no") << ", probability "
       << fmt(pr) << '\n';
  }
  out.json["states"] = std::move(states);
  out.text = os.str();
  return out;
}

CommandOutput cmd_prob(const Scenario& s, const std::string& proposition, const std::string& state,
                       const Tolerance& tol) {
  const double pr = probability(s.proposition(proposition), s.observables, s.state(state), tol);
  CommandOutput out;
  out.json["command"] = "prob";
  out.json["proposition"] = proposition;
  out.json["text"] = s.proposition_text.at(proposition);
  out.json["state"] = state;
  out.json["probability"] = num(pr);
  out.text = "Pr{" + s.proposition_text.at(proposition) + " || " + state + "} = " + fmt(pr) + "\n";
  return out;
}

CommandOutput cmd_check(const Scenario& s, const std::string& kind, const std::vector<std::string>& observables,
                        const std::string& state, const Tolerance& tol) {
  const std::vector<Observable> xs = resolve(s, observables);
  const DensityState& rho = s.state(state);
  CommandOutput out;
  out.json["command"] = "check";
  out.json["kind"] = kind;
  out.json["observables"] = names_json(observables);
  out.json["state"] = state;
  std::ostringstream os;
  if (kind == "determinate") {
    if (xs.empty()) throw Error(ErrorKind::ValidationError, "check determinate: no observables given");
    const JpdResult r = jpd_battery(xs, rho, tol);
    out.passed = r.report.verdict();
    out.json["verdict"] = out.passed;
    out.json["com"] = projector_json(r.com);
    out.json["cyclic_rank"] = r.cyclic.rank();
    out.json["report"] = r.report.to_json();
    if (r.distribution) out.json["distribution"] = r.distribution->to_json();
    os << r.report.to_text() << "com rank " << r.com.rank() << ", cyclic rank " << r.cyclic.rank() << '\n';
    if (r.distribution) os << distribution_text(*r.distribution);
  } else if (kind == "equal") {
    if (xs.size() != 2) throw Error(ErrorKind::ValidationError, "check equal: expected exactly two observables");
    const IdResult r = id_battery(xs[0], xs[1], rho, tol);
    out.passed = r.report.verdict();
    out.json["verdict"] = out.passed;
    out.json["equality"] = projector_json(r.equality);
    out.json["report"] = r.report.to_json();
    if (r.distribution) out.json["distribution"] = r.distribution->to_json();
    os << r.report.to_text() << "equality rank " << r.equality.rank() << '\n';
    if (r.distribution) os << distribution_text(*r.distribution);
  } else {
    throw Error(ErrorKind::UnknownName, "unknown check kind '" + kind + "' (expected determinate or equal)");
  }
  out.text = os.str();
  return out;
}

CommandOutput cmd_jointdist(const Scenario& s, const std::vector<std::string>& observables, const std::string& state,
                            const Tolerance& tol) {
  if (observables.empty()) throw Error(ErrorKind::ValidationError, "jointdist: no observables given");
  const std::vector<Observable> xs = resolve(s, observables);
  const DensityState& rho = s.state(state);
  const JointDistribution d = meet_distribution(xs, rho, tol);
  CommandOutput out;
  out.passed = simultaneously_determinate(xs, rho, tol);
  out.json["command"] = "jointdist";
  out.json["observables"] = names_json(observables);
  out.json["state"] = state;
  out.json["determinate"] = out.passed;
  out.json["distribution"] = d.to_json();
  out.text = distribution_text(d) + "determinate " + (out.passed ? "yes" : "no") + "\n";
  return out;
}

CommandOutput cmd_measure(const Scenario& s, const std::string& process, const std::string& observable,
                          const std::string& state, const Tolerance& tol) {
  const MeasuringProcess& mp = s.process(process);
  const Observable& a = s.observable(observable);
  const DensityState& rho = s.state(state);
  const Report r = mob_battery(mp, a, rho, tol);
  const std::vector<OutcomeProbability> dist = output_distribution(mp, rho, tol);
  CommandOutput out;
  out.passed = r.all_passed();
  out.json["command"] = "measure";
  out.json["process"] = process;
  out.json["observable"] = observable;
  out.json["state"] = state;
  out.json["verdict"] = out.passed;
  out.json["report"] = r.to_json();
  ojson outcomes = ojson::array();
  std::ostringstream os;
  os << r.to_text() << "output distribution\n";
  for (const OutcomeProbability& o : dist) {
    outcomes.push_back({{"outcome", num(o.outcome)}, {"probability", num(o.probability)}});
    os << "  " << fmt(o.outcome) << "  " << fmt(o.probability) << '\n';
  }
  out.json["output_distribution"] = std::move(outcomes);
  out.text = os.str();
  return out;
}

CommandOutput cmd_battery(const std::string& suite, std::uint64_t seed, const Tolerance& tol) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  CommandOutput out;
  out.json["command"] = "battery";
  out.json["seed"] = seed;
  ojson results = ojson::array();
  std::ostringstream os;
  for (const std::string& n : names) {
    const SuiteResult r = run_suite(n, seed, tol);
    out.passed = out.passed && r.passed();
    results.push_back(r.to_json());
    os << "suite " << n << " (seed " << seed << "): " << (r.passed() ? "PASS" : "FAIL") << '\n' << r.report.to_text();
  }
  out.json["suites"] = std::move(results);
  out.json["passed"] = out.passed;
  out.text = os.str();
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InconsistentBattery:
    case ErrorKind::CrossCheckFailure:
      return 1;
    default:
      return 2;
  }
}

}  // namespace qlogic
