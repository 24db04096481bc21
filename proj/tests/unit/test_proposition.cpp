#include <gtest/gtest.h>

#include "qlogic/error.hpp"
#include "qlogic/proposition.hpp"

using namespace qlogic;

TEST(Parser, Examples) {
  EXPECT_TRUE(same_structure(*parse_proposition("X <= 0.5"), *make_leq("X", 0.5)));
  EXPECT_TRUE(same_structure(*parse_proposition("not (X == 1 and Y = Z)"),
                             *make_not(make_and(make_eq_const("X", 1), make_eq_obs("Y", "Z")))));
  EXPECT_TRUE(same_structure(*parse_proposition("com(X, Y, Z) or X <= 2"),
                             *make_or(make_com({"X", "Y", "Z"}), make_leq("X", 2))));
}

TEST(Parser, Precedence) {
  // or < and < not
  EXPECT_TRUE(same_structure(*parse_proposition("A <= 1 or B <= 1 and C <= 1"),
                             *make_or(make_leq("A", 1), make_and(make_leq("B", 1), make_leq("C", 1)))));
  EXPECT_TRUE(same_structure(*parse_proposition("not A <= 1 and B <= 1"),
                             *make_and(make_not(make_leq("A", 1)), make_leq("B", 1))));
  EXPECT_TRUE(same_structure(*parse_proposition("A <= 1 and B <= 1 and C <= 1"),
                             *make_and(make_and(make_leq("A", 1), make_leq("B", 1)), make_leq("C", 1))));
}

TEST(Parser, Numbers) {
  const PropPtr p = parse_proposition("X <= -2.25");
  EXPECT_EQ(std::get<LeqAtom>(p->node).value, -2.25);
  EXPECT_EQ(std::get<EqConstAtom>(parse_proposition("X == +3")->node).value, 3.0);
  EXPECT_THROW(parse_proposition("X <= 1."), SyntaxError);
}

TEST(Parser, ComNeedsTwoDistinct) {
  EXPECT_THROW(parse_proposition("com(X)"), SyntaxError);
  EXPECT_THROW(parse_proposition("com(X, X)"), SyntaxError);
  // "com" without a parenthesis is an ordinary identifier.
  EXPECT_TRUE(same_structure(*parse_proposition("com <= 1"), *make_leq("com", 1)));
}

TEST(Parser, ErrorPositions) {
  try {
    parse_proposition("X <= ");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 6);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    parse_proposition("X <= 1 and\n  Y <");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 5);
  }
  EXPECT_THROW(parse_proposition("(X <= 1"), SyntaxError);
  EXPECT_THROW(parse_proposition("X <= 1 Y <= 2"), SyntaxError);
  EXPECT_THROW(parse_proposition(""), SyntaxError);
  EXPECT_THROW(parse_proposition("X # 1"), SyntaxError);
}

TEST(Parser, PrintRoundTrip) {
  const char* samples[] = {"X <= 0.5", "not (X == 1 and Y = Z)", "com(X, Y, Z) or X <= 2",
                           "not not (A <= -1 or B == 0.125)", "(A = B and com(A, B)) or not C <= 3"};
  for (const char* s : samples) {
    const PropPtr p = parse_proposition(s);
    EXPECT_TRUE(same_structure(*p, *parse_proposition(to_string(*p)))) << s;
  }
}

TEST(Parser, Mentions) {
  const PropPtr p = parse_proposition("Y <= 1 and (X = Y or com(Z, X))");
  EXPECT_EQ(mentioned_observables(*p), (std::vector<std::string>{"Y", "X", "Z"}));
  const PropPtr s = parse_skeleton("b or not (a and b)");
  EXPECT_EQ(mentioned_variables(*s), (std::vector<std::string>{"b", "a"}));
  EXPECT_THROW(parse_skeleton("a <= 1"), SyntaxError);
}

TEST(Parser, Spans) {
  const PropPtr p = parse_proposition("  X <= 1");
  EXPECT_EQ(p->span.column, 3);
  EXPECT_EQ(p->span.offset, 2u);
}
