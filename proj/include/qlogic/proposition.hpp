#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace qlogic {

/// 1-based position of a node in its source text.
struct SourceSpan {
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct Prop;
using PropPtr = std::shared_ptr<const Prop>;

/// X <= x
struct LeqAtom {
  std::string obs;
  double value;
};
/// X == x
struct EqConstAtom {
  std::string obs;
  double value;
};
/// X = Y
struct EqObsAtom {
  std::string lhs;
  std::string rhs;
};
/// com(X1, ..., Xn), n >= 2 distinct names
struct ComAtom {
  std::vector<std::string> obs;
};
/// Propositional variable; only produced by parse_skeleton.
struct VarRef {
  std::string name;
};
struct NotNode {
  PropPtr child;
};
struct AndNode {
  PropPtr left;
  PropPtr right;
};
struct OrNode {
  PropPtr left;
  PropPtr right;
};

struct Prop {
  std::variant<LeqAtom, EqConstAtom, EqObsAtom, ComAtom, VarRef, NotNode, AndNode, OrNode> node;
  SourceSpan span;
};

/// Grammar, loosest first:
///   prop  := and ("or" and)*
///   and   := unary ("and" unary)*
///   unary := "not" unary | "(" prop ")" | atom
///   atom  := ID "<=" NUM | ID "==" NUM | ID "=" ID | "com" "(" ID ("," ID)+ ")"
/// Throws SyntaxError with the position and the set of expected tokens.
PropPtr parse_proposition(const std::string& text);

/// Same connectives over bare identifiers, which become VarRef leaves.
PropPtr parse_skeleton(const std::string& text);

std::string to_string(const Prop& p);
/// Observable names in order of first mention.
std::vector<std::string> mentioned_observables(const Prop& p);
/// Variable names in order of first mention.
std::vector<std::string> mentioned_variables(const Prop& p);

PropPtr make_leq(std::string obs, double value);
PropPtr make_eq_const(std::string obs, double value);
PropPtr make_eq_obs(std::string lhs, std::string rhs);
PropPtr make_com(std::vector<std::string> obs);
PropPtr make_var(std::string name);
PropPtr make_not(PropPtr child);
PropPtr make_and(PropPtr left, PropPtr right);
PropPtr make_or(PropPtr left, PropPtr right);

/// Structural equality, ignoring spans.
bool same_structure(const Prop& a, const Prop& b);

}  // namespace qlogic
