#include "seal/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace seal {

namespace {

struct Token {
  enum class Kind { Ident, Sym, End } kind;
  std::string text;
};

struct Lexer {
  std::string src;
  size_t pos = 0;

  Token next() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos >= src.size()) return {Token::Kind::End, ""};
    char c = src[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
              src[pos] == '$'))
        ++pos;
      return {Token::Kind::Ident, src.substr(start, pos - start)};
    }
    // multi-char symbols
    auto two = src.substr(pos, 2);
    if (two == "->" || two == "=>" || two == "()") {
      pos += 2;
      return {Token::Kind::Sym, two};
    }
    static const std::string singles = "\\.:()<>,*+|=@[]";
    if (singles.find(c) != std::string::npos) {
      ++pos;
      return {Token::Kind::Sym, std::string(1, c)};
    }
    fail(Err::SyntaxError, "unexpected character '" + std::string(1, c) + "'");
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t i = 0;
  std::vector<std::string> scope;  // binder names, innermost last

  explicit Parser(const std::string& text) {
    Lexer lex{text};
    for (;;) {
      Token t = lex.next();
      bool end = t.kind == Token::Kind::End;
      toks.push_back(std::move(t));
      if (end) break;
    }
  }

  const Token& peek(size_t ahead = 0) const {
    size_t j = i + ahead;
    return j < toks.size() ? toks[j] : toks.back();
  }
  Token take() { return toks[i < toks.size() - 1 ? i++ : i]; }
  bool at_sym(const std::string& s) const {
    return peek().kind == Token::Kind::Sym && peek().text == s;
  }
  bool at_ident(const std::string& s) const {
    return peek().kind == Token::Kind::Ident && peek().text == s;
  }
  void expect_sym(const std::string& s) {
    if (!at_sym(s)) fail(Err::SyntaxError, "expected '" + s + "' near '" + peek().text + "'");
    ++i;
  }
  std::string expect_ident(const char* what) {
    if (peek().kind != Token::Kind::Ident)
      fail(Err::SyntaxError, std::string("expected ") + what + " near '" + peek().text + "'");
    return take().text;
  }
  std::string expect_level() {
    expect_sym("@");
    return expect_ident("level");
  }

  static bool reserved(const std::string& s) {
    static const std::set<std::string> kw = {"unit", "case", "of",   "in",  "bind",
                                             "p1",   "p2",   "i1",   "i2",  "seal",
                                             "unseal", "eta", "protect"};
    return kw.count(s) > 0;
  }

  // ---- types ----

  Type type() { return arrow_type(); }

  Type arrow_type() {
    Type lhs = sum_type();
    if (at_sym("->")) {
      ++i;
      return Type::arrow(lhs, arrow_type());
    }
    return lhs;
  }

  Type sum_type() {
    Type lhs = prod_type();
    while (at_sym("+")) {
      ++i;
      lhs = Type::sum(lhs, prod_type());
    }
    return lhs;
  }

  Type prod_type() {
    Type lhs = atom_type();
    while (at_sym("*")) {
      ++i;
      lhs = Type::prod(lhs, atom_type());
    }
    return lhs;
  }

  Type atom_type() {
    if (at_ident("unit")) {
      ++i;
      return Type::unit();
    }
    if (at_ident("a") && peek(1).kind == Token::Kind::Sym && peek(1).text == "@") {
      ++i;
      return Type::base(expect_level());
    }
    if (at_ident("T") && peek(1).kind == Token::Kind::Sym && peek(1).text == "@") {
      ++i;
      std::string lvl = expect_level();
      return Type::monad(lvl, atom_type());
    }
    if (at_sym("[")) {
      ++i;
      Type body = type();
      expect_sym("]");
      return Type::seal(expect_level(), body);
    }
    if (at_sym("(")) {
      ++i;
      Type t = type();
      expect_sym(")");
      return t;
    }
    fail(Err::SyntaxError, "expected a type near '" + peek().text + "'");
  }

  // ---- terms ----

  Term var(const std::string& name) {
    for (size_t d = 0; d < scope.size(); ++d) {
      size_t idx = scope.size() - 1 - d;
      if (scope[idx] == name) return Term::bound(static_cast<int>(d), name);
    }
    return Term::free(name);
  }

  Term term() {
    if (at_sym("\\")) {
      ++i;
      std::string x = expect_ident("binder");
      expect_sym(":");
      Type anno = type();
      expect_sym(".");
      scope.push_back(x);
      Term body = term();
      scope.pop_back();
      return Term::lam(x, anno, body);
    }
    if (at_ident("case")) {
      ++i;
      Term scrut = term_no_case();
      if (!at_ident("of")) fail(Err::SyntaxError, "expected 'of' in case");
      ++i;
      std::string x1 = expect_ident("binder");
      expect_sym("=>");
      scope.push_back(x1);
      Term b1 = term();
      scope.pop_back();
      expect_sym("|");
      std::string x2 = expect_ident("binder");
      expect_sym("=>");
      scope.push_back(x2);
      Term b2 = term();
      scope.pop_back();
      return Term::case_of(scrut, x1, b1, x2, b2);
    }
    if (at_ident("bind")) {
      ++i;
      std::string x = expect_ident("binder");
      expect_sym("=");
      Term rhs = term_no_case();
      if (!at_ident("in")) fail(Err::SyntaxError, "expected 'in' in bind");
      ++i;
      scope.push_back(x);
      Term body = term();
      scope.pop_back();
      return Term::bind(x, rhs, body);
    }
    return app_term();
  }

  // Scrutinee / bind-rhs position: stops at 'of'/'in'; binder forms
  // there need parentheses.
  Term term_no_case() { return app_term(); }

  Term app_term() {
    Term head = prefix_term();
    for (;;) {
      if (starts_atom()) {
        head = Term::app(head, atom_term());
      } else {
        return head;
      }
    }
  }

  bool starts_atom() const {
    if (at_sym("(") || at_sym("<") || at_sym("()")) return true;
    if (peek().kind == Token::Kind::Ident && !reserved(peek().text)) {
      // 'of' / 'in' end an application chain
      return !at_ident("of") && !at_ident("in");
    }
    return false;
  }

  Term prefix_term() {
    if (at_ident("p1")) { ++i; return Term::proj1(prefix_term()); }
    if (at_ident("p2")) { ++i; return Term::proj2(prefix_term()); }
    if (at_ident("i1")) { ++i; return Term::inj1(prefix_term()); }
    if (at_ident("i2")) { ++i; return Term::inj2(prefix_term()); }
    if (at_ident("seal")) {
      ++i;
      std::string lvl = expect_level();
      return Term::seal(lvl, prefix_term());
    }
    if (at_ident("unseal")) {
      ++i;
      std::string lvl = expect_level();
      return Term::unseal(prefix_term(), lvl);
    }
    if (at_ident("eta")) {
      ++i;
      std::string lvl = expect_level();
      return Term::eta(lvl, prefix_term());
    }
    if (at_ident("protect")) {
      ++i;
      std::string lvl = expect_level();
      return Term::protect(lvl, prefix_term());
    }
    return atom_app();
  }

  // After a prefix operator, an application chain of atoms is allowed
  // only through parentheses; a bare chain binds to the prefix head.
  Term atom_app() {
    Term head = atom_term();
    while (starts_atom()) head = Term::app(head, atom_term());
    return head;
  }

  Term atom_term() {
    if (at_sym("()")) {
      ++i;
      return Term::unit();
    }
    if (at_sym("(")) {
      ++i;
      Term t = term();
      expect_sym(")");
      return t;
    }
    if (at_sym("<")) {
      ++i;
      Term a = term();
      expect_sym(",");
      Term b = term();
      expect_sym(">");
      return Term::pair(a, b);
    }
    if (peek().kind == Token::Kind::Ident && !reserved(peek().text)) {
      return var(take().text);
    }
    fail(Err::SyntaxError, "expected a term near '" + peek().text + "'");
  }

  void expect_end(const char* what) {
    if (peek().kind != Token::Kind::End)
      fail(Err::SyntaxError, std::string("trailing input after ") + what + ": '" +
                                 peek().text + "'");
  }
};

}  // namespace

Type parse_type(const std::string& text) {
  Parser p(text);
  Type t = p.type();
  p.expect_end("type");
  return t;
}

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.term();
  p.expect_end("term");
  return t;
}

NamedCtx parse_ctx(const std::string& text) {
  NamedCtx out;
  size_t start = 0;
  auto add = [&](const std::string& entry) {
    bool blank = entry.find_first_not_of(" \t") == std::string::npos;
    if (entry.empty() || blank) return;
    auto colon = entry.find(':');
    if (colon == std::string::npos) fail(Err::SyntaxError, "context entry needs ':'");
    std::string name = entry.substr(0, colon);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    size_t s = 0;
    while (s < name.size() && std::isspace(static_cast<unsigned char>(name[s]))) ++s;
    name = name.substr(s);
    if (name.empty()) fail(Err::SyntaxError, "empty context variable name");
    if (out.count(name)) fail(Err::SyntaxError, "duplicate context variable " + name);
    out.emplace(name, parse_type(entry.substr(colon + 1)));
  };
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      add(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace seal
