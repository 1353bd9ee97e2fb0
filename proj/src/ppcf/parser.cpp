#include "ppcf/parser.hpp"

#include <cctype>
#include <optional>

namespace ppcf {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += i + 1 == items.size() ? " or " : ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + join(expected) +
                         ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* const kKeywords[] = {"nat", "coin", "succ", "if", "fix", "let", "in"};

bool is_keyword(const std::string& s) {
  for (const char* k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (src.substr(i, 2) == "->" || src.substr(i, 2) == "(+") {
      out.push_back({Tok::Symbol, std::string(src.substr(i, 2)), line, col});
      advance(2);
    } else if (std::string_view("\\:.(),/=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, {"a token"}, "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Term parse_program() {
    Term t = term();
    expect_end();
    return t;
  }

  PType parse_type_only() {
    PType t = type();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(expected), found);
  }

  bool at_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool at_keyword(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

  void expect_symbol(const std::string& s) {
    if (!at_symbol(s)) fail({"'" + s + "'"});
    ++pos_;
  }
  void expect_keyword(const std::string& s) {
    if (!at_keyword(s)) fail({"'" + s + "'"});
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail({"end of input"});
  }

  std::string ident() {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail({"identifier"});
    return toks_[pos_++].text;
  }

  std::uint64_t number() {
    if (peek().kind != Tok::Number) fail({"natural number"});
    const Token& t = peek();
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(t.text, &used);
      ++pos_;
      return v;
    } catch (const std::out_of_range&) {
      throw ParseError(t.line, t.column, {"natural number below 2^64"}, "'" + t.text + "'");
    }
  }

  Prob probability() {
    const Token start = peek();
    if (start.kind != Tok::Number) fail({"probability literal"});
    mpz_class num(toks_[pos_++].text, 10);
    mpz_class den(1);
    if (at_symbol("/")) {
      ++pos_;
      if (peek().kind != Tok::Number) fail({"denominator"});
      den = mpz_class(toks_[pos_++].text, 10);
    }
    if (den == 0 || num > den) {
      throw ParseError(start.line, start.column, {"probability in [0,1]"},
                       "'" + num.get_str() + "/" + den.get_str() + "'");
    }
    kegel::Rational r(num, den);
    r.canonicalize();
    return Prob(r);
  }

  PType type() {
    PType lhs = type_atom();
    if (at_symbol("->")) {
      ++pos_;
      return PType::arrow(lhs, type());
    }
    return lhs;
  }

  PType type_atom() {
    if (at_keyword("nat")) {
      ++pos_;
      return PType::nat();
    }
    if (at_symbol("(")) {
      ++pos_;
      PType t = type();
      expect_symbol(")");
      return t;
    }
    fail({"'nat'", "'('"});
  }

  Term term() {
    Term lhs = app();
    if (at_symbol("(+")) {
      ++pos_;
      Prob kappa = probability();
      expect_symbol(")");
      Term rhs = app();
      if (at_symbol("(+")) fail({"end of choice (the (+k) operator does not associate; add parentheses)"});
      return desugar_choice(lhs, kappa, rhs);
    }
    return lhs;
  }

  bool at_atom_start() const {
    const Token& t = peek();
    if (t.kind == Tok::Number) return true;
    if (t.kind == Tok::Ident) return t.text != "in" && t.text != "nat";
    return t.kind == Tok::Symbol && (t.text == "(" || t.text == "\\");
  }

  Term app() {
    if (!at_atom_start()) fail({"term"});
    Term t = atom();
    while (at_atom_start()) t = Term::app(t, atom());
    return t;
  }

  Term atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) return Term::num(number());
    if (at_symbol("(")) {
      ++pos_;
      Term inner = term();
      expect_symbol(")");
      return inner;
    }
    if (at_symbol("\\")) {
      ++pos_;
      std::string x = ident();
      expect_symbol(":");
      PType ty = type();
      expect_symbol(".");
      return Term::lam(x, ty, term());
    }
    if (at_keyword("coin")) {
      ++pos_;
      expect_symbol("(");
      Prob kappa = probability();
      expect_symbol(")");
      return Term::coin(kappa);
    }
    if (at_keyword("succ")) {
      ++pos_;
      expect_symbol("(");
      Term a = term();
      expect_symbol(")");
      return Term::succ(a);
    }
    if (at_keyword("fix")) {
      ++pos_;
      expect_symbol("(");
      Term a = term();
      expect_symbol(")");
      return Term::fix(a);
    }
    if (at_keyword("if")) {
      ++pos_;
      expect_symbol("(");
      Term scrutinee = term();
      expect_symbol(",");
      Term zero = term();
      expect_symbol(",");
      std::string z = ident();
      expect_symbol(".");
      Term rest = term();
      expect_symbol(")");
      return Term::if_(scrutinee, zero, z, rest);
    }
    if (at_keyword("let")) {
      ++pos_;
      std::string x = ident();
      expect_symbol("=");
      Term bound = term();
      expect_keyword("in");
      return desugar_let(x, bound, term());
    }
    return Term::var(ident());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse(std::string_view text) { return Parser(text).parse_program(); }

PType parse_type(std::string_view text) { return Parser(text).parse_type_only(); }

}  // namespace ppcf
