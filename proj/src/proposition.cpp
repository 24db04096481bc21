#include "qlogic/proposition.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

enum class Tok { Id, Num, Le, EqEq, Eq, LParen, RParen, Comma, Not, And, Or, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Id: return "identifier";
    case Tok::Num: return "number";
    case Tok::Le: return "'<='";
    case Tok::EqEq: return "'=='";
    case Tok::Eq: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Not: return "'not'";
    case Tok::And: return "'and'";
    case Tok::Or: return "'or'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  double number = 0.0;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourceSpan span{line_, column_, pos_, 0};
      if (pos_ >= text_.size()) {
        out.push_back(Token{Tok::End, "", 0.0, span});
        return out;
      }
      const char c = text_[pos_];
      Token t{Tok::End, "", 0.0, span};
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
        t.text = text_.substr(pos_, end - pos_);
        t.kind = t.text == "not" ? Tok::Not : t.text == "and" ? Tok::And : t.text == "or" ? Tok::Or : Tok::Id;
        advance(end - pos_);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        std::size_t end = pos_ + 1;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        if (end < text_.size() && text_[end] == '.') {
          ++end;
          const std::size_t frac = end;
          while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
          if (end == frac) fail_at(line_, column_ + static_cast<int>(end - pos_), "digit after '.'");
        }
        t.kind = Tok::Num;
        t.text = text_.substr(pos_, end - pos_);
        const char* first = t.text.data() + (t.text[0] == '+' ? 1 : 0);
        std::from_chars(first, t.text.data() + t.text.size(), t.number);
        advance(end - pos_);
      } else if (c == '<' && peek(1) == '=') {
        t.kind = Tok::Le;
        advance(2);
      } else if (c == '=' && peek(1) == '=') {
        t.kind = Tok::EqEq;
        advance(2);
      } else if (c == '=') {
        t.kind = Tok::Eq;
        advance(1);
      } else if (c == '(') {
        t.kind = Tok::LParen;
        advance(1);
      } else if (c == ')') {
        t.kind = Tok::RParen;
        advance(1);
      } else if (c == ',') {
        t.kind = Tok::Comma;
        advance(1);
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_, {});
      }
      t.span.length = pos_ - t.span.offset;
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void advance(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance(1);
  }

  [[noreturn]] static void fail_at(int line, int column, const std::string& expected) {
    throw SyntaxError("malformed number", line, column, {expected});
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, bool skeleton) : toks_(std::move(tokens)), skeleton_(skeleton) {}

  PropPtr parse() {
    PropPtr p = parse_or();
    if (cur().kind != Tok::End) fail({skeleton_ ? "'and'" : "'and'", "'or'", "end of input"});
    return p;
  }

 private:
  const Token& cur() const { return toks_[at_]; }
  const Token& next() const { return toks_[std::min(at_ + 1, toks_.size() - 1)]; }
  Token take() { return toks_[at_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = cur();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    if (t.kind != Tok::End && t.text.empty()) found = describe(t.kind);
    std::string msg = "unexpected " + found + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
    throw SyntaxError(msg, t.span.line, t.span.column, std::move(expected));
  }

  Token expect(Tok kind) {
    if (cur().kind != kind) fail({describe(kind)});
    return take();
  }

  static PropPtr wrap(decltype(Prop::node) node, SourceSpan span) {
    return std::make_shared<const Prop>(Prop{std::move(node), span});
  }

  static SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    s.length = b.offset + b.length - a.offset;
    return s;
  }

  PropPtr parse_or() {
    PropPtr left = parse_and();
    while (cur().kind == Tok::Or) {
      take();
      PropPtr right = parse_and();
      const SourceSpan span = cover(left->span, right->span);
      left = wrap(OrNode{left, right}, span);
    }
    return left;
  }

  PropPtr parse_and() {
    PropPtr left = parse_unary();
    while (cur().kind == Tok::And) {
      take();
      PropPtr right = parse_unary();
      const SourceSpan span = cover(left->span, right->span);
      left = wrap(AndNode{left, right}, span);
    }
    return left;
  }

  PropPtr parse_unary() {
    if (cur().kind == Tok::Not) {
      const Token t = take();
      PropPtr child = parse_unary();
      return wrap(NotNode{child}, cover(t.span, child->span));
    }
    if (cur().kind == Tok::LParen) {
      const Token open = take();
      PropPtr inner = parse_or();
      const Token close = expect(Tok::RParen);
      auto copy = std::make_shared<Prop>(*inner);
      copy->span = cover(open.span, close.span);
      return copy;
    }
    return parse_atom();
  }

  PropPtr parse_atom() {
    if (cur().kind != Tok::Id) fail({"'not'", "'('", "identifier"});
    if (skeleton_) {
      const Token id = take();
      return wrap(VarRef{id.text}, id.span);
    }
    if (cur().text == "com" && next().kind == Tok::LParen) return parse_com();
    const Token id = take();
    switch (cur().kind) {
      case Tok::Le: {
        take();
        const Token num = expect(Tok::Num);
        return wrap(LeqAtom{id.text, num.number}, cover(id.span, num.span));
      }
      case Tok::EqEq: {
        take();
        const Token num = expect(Tok::Num);
        return wrap(EqConstAtom{id.text, num.number}, cover(id.span, num.span));
      }
      case Tok::Eq: {
        take();
        const Token rhs = expect(Tok::Id);
        return wrap(EqObsAtom{id.text, rhs.text}, cover(id.span, rhs.span));
      }
      default:
        fail({"'<='", "'=='", "'='"});
    }
  }

  PropPtr parse_com() {
    const Token kw = take();
    expect(Tok::LParen);
    std::vector<std::string> names;
    std::set<std::string> seen;
    do {
      const Token id = expect(Tok::Id);
      if (!seen.insert(id.text).second) {
        throw SyntaxError("observable '" + id.text + "' repeated in com(...)", id.span.line, id.span.column,
                          {"distinct identifier"});
      }
      names.push_back(id.text);
      if (names.size() == 1 && cur().kind != Tok::Comma) fail({"','"});
    } while (cur().kind == Tok::Comma && (take(), true));
    const Token close = expect(Tok::RParen);
    return wrap(ComAtom{std::move(names)}, cover(kw.span, close.span));
  }

  std::vector<Token> toks_;
  bool skeleton_;
  std::size_t at_ = 0;
};

void collect(const Prop& p, std::vector<std::string>& out, std::set<std::string>& seen, bool variables) {
  auto note = [&](const std::string& name) {
    if (seen.insert(name).second) out.push_back(name);
  };
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LeqAtom> || std::is_same_v<T, EqConstAtom>) {
          if (!variables) note(n.obs);
        } else if constexpr (std::is_same_v<T, EqObsAtom>) {
          if (!variables) {
            note(n.lhs);
            note(n.rhs);
          }
        } else if constexpr (std::is_same_v<T, ComAtom>) {
          if (!variables)
            for (const auto& o : n.obs) note(o);
        } else if constexpr (std::is_same_v<T, VarRef>) {
          if (variables) note(n.name);
        } else if constexpr (std::is_same_v<T, NotNode>) {
          collect(*n.child, out, seen, variables);
        } else {
          collect(*n.left, out, seen, variables);
          collect(*n.right, out, seen, variables);
        }
      },
      p.node);
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

PropPtr parse_proposition(const std::string& text) { return Parser(Lexer(text).run(), false).parse(); }

PropPtr parse_skeleton(const std::string& text) { return Parser(Lexer(text).run(), true).parse(); }

std::string to_string(const Prop& p) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LeqAtom>) {
          return n.obs + " <= " + format_number(n.value);
        } else if constexpr (std::is_same_v<T, EqConstAtom>) {
          return n.obs + " == " + format_number(n.value);
        } else if constexpr (std::is_same_v<T, EqObsAtom>) {
          return n.lhs + " = " + n.rhs;
        } else if constexpr (std::is_same_v<T, ComAtom>) {
          std::string s = "com(";
          for (std::size_t i = 0; i < n.obs.size(); ++i) s += (i ? ", " : "") + n.obs[i];
          return s + ")";
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, NotNode>) {
          return "not " + to_string(*n.child);
        } else if constexpr (std::is_same_v<T, AndNode>) {
          return "(" + to_string(*n.left) + " and " + to_string(*n.right) + ")";
        } else {
          return "(" + to_string(*n.left) + " or " + to_string(*n.right) + ")";
        }
      },
      p.node);
}

std::vector<std::string> mentioned_observables(const Prop& p) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect(p, out, seen, false);
  return out;
}

std::vector<std::string> mentioned_variables(const Prop& p) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect(p, out, seen, true);
  return out;
}

namespace {
PropPtr make(decltype(Prop::node) node) { return std::make_shared<const Prop>(Prop{std::move(node), {}}); }
}  // namespace

PropPtr make_leq(std::string obs, double value) { return make(LeqAtom{std::move(obs), value}); }
PropPtr make_eq_const(std::string obs, double value) { return make(EqConstAtom{std::move(obs), value}); }
PropPtr make_eq_obs(std::string lhs, std::string rhs) { return make(EqObsAtom{std::move(lhs), std::move(rhs)}); }
PropPtr make_com(std::vector<std::string> obs) { return make(ComAtom{std::move(obs)}); }
PropPtr make_var(std::string name) { return make(VarRef{std::move(name)}); }
PropPtr make_not(PropPtr child) { return make(NotNode{std::move(child)}); }
PropPtr make_and(PropPtr left, PropPtr right) { return make(AndNode{std::move(left), std::move(right)}); }
PropPtr make_or(PropPtr left, PropPtr right) { return make(OrNode{std::move(left), std::move(right)}); }

bool same_structure(const Prop& a, const Prop& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, LeqAtom> || std::is_same_v<T, EqConstAtom>) {
          return x.obs == y.obs && x.value == y.value;
        } else if constexpr (std::is_same_v<T, EqObsAtom>) {
          return x.lhs == y.lhs && x.rhs == y.rhs;
        } else if constexpr (std::is_same_v<T, ComAtom>) {
          return x.obs == y.obs;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, NotNode>) {
          return same_structure(*x.child, *y.child);
        } else {
          return same_structure(*x.left, *y.left) && same_structure(*x.right, *y.right);
        }
      },
      a.node);
}

}  // namespace qlogic
