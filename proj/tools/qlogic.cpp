// Command-line front end over scenario files and the built-in suites.
//
//   qlogic eval      <scenario> <proposition>
//   qlogic prob      <scenario> <proposition> <state>
//   qlogic check     <scenario> determinate|equal <observable>... <state>
//   qlogic jointdist <scenario> <observable>... <state>
//   qlogic measure   <scenario> <process> <observable> <state>
//   qlogic battery   <scenario>|builtin [suite|all]
//
// Exit codes: 0 every assertion passed, 1 an assertion failed, 2 bad input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlogic/commands.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct Options {
  std::string command;
  std::string source;
  std::vector<std::string> names;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
};

void need(const std::vector<std::string>& names, std::size_t min, std::size_t max, const char* usage) {
  if (names.size() < min || names.size() > max) {
    throw qlogic::Error(qlogic::ErrorKind::ValidationError, std::string("usage: ") + usage);
  }
}

qlogic::CommandOutput dispatch(const Options& o, const qlogic::Tolerance& tol) {
  using namespace qlogic;
  const std::vector<std::string>& n = o.names;
  if (o.command == "battery") {
    need(n, 0, 1, "qlogic battery <scenario>|builtin [suite|all]");
    std::uint64_t seed = kDefaultSeed;
    if (o.source != "builtin") {
      const Scenario s = load_scenario(o.source, tol);
      if (s.seed) seed = *s.seed;
    }
    if (o.seed) seed = *o.seed;
    return cmd_battery(n.empty() ? "all" : n[0], seed, tol);
  }
  const Scenario s = load_scenario(o.source, tol);
  if (o.command == "eval") {
    need(n, 1, 1, "qlogic eval <scenario> <proposition>");
    return cmd_eval(s, n[0], tol);
  }
  if (o.command == "prob") {
    need(n, 2, 2, "qlogic prob <scenario> <proposition> <state>");
    return cmd_prob(s, n[0], n[1], tol);
  }
  if (o.command == "check") {
    need(n, 3, SIZE_MAX, "qlogic check <scenario> determinate|equal <observable>... <state>");
    return cmd_check(s, n.front(), {n.begin() + 1, n.end() - 1}, n.back(), tol);
  }
  if (o.command == "jointdist") {
    need(n, 2, SIZE_MAX, "qlogic jointdist <scenario> <observable>... <state>");
    return cmd_jointdist(s, {n.begin(), n.end() - 1}, n.back(), tol);
  }
  need(n, 3, 3, "qlogic measure <scenario> <process> <observable> <state>");
  return cmd_measure(s, n[0], n[1], n[2], tol);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projection-valued quantum logic over finite-dimensional scenarios"};
  app.require_subcommand(1, 1);
  Options o;
  for (const char* name : {"eval", "prob", "check", "jointdist", "measure", "battery"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("source", o.source, "Scenario JSON file, or 'builtin' for battery")->required();
    sub->add_option("names", o.names, "Propositions, observables, states, processes or suite");
    sub->add_flag("--json", o.json, "Print the machine-readable report");
    sub->add_option("--seed", o.seed, "Seed for battery suites");
    sub->add_option("--tol", o.tol, "assert_tol override (takes precedence over QLOGIC_TOL)");
    sub->callback([&o, sub] { o.command = sub->get_name(); });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const qlogic::Tolerance tol =
        o.tol ? qlogic::Tolerance::with_assert_tol(*o.tol) : qlogic::Tolerance::from_environment();
    const qlogic::CommandOutput out = dispatch(o, tol);
    if (o.json) std::cout << out.json.dump(2) << '\n';
    else std::cout << out.text;
    return out.passed ? 0 : 1;
  } catch (const qlogic::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qlogic::exit_code_for(e);
  }
}
