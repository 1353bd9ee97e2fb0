#include "fpc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace fpc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& expected, const std::string& found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected +
                         ", found " + found),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* const kKeywords[] = {"inl", "inr", "case", "of", "fst", "snd", "intro", "elim", "mu", "type"};

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
    } else if (src.substr(i, 2) == "->" || src.substr(i, 2) == "=>") {
      out.push_back({Tok::Symbol, std::string(src.substr(i, 2)), line, col});
      advance(2);
    } else if (std::string_view("\\:.(),[]+*|=;").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, "a token", "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  FpcProgram program() {
    std::map<std::string, FType> aliases;
    while (at_keyword("type")) {
      ++pos_;
      std::string name = ident();
      expect("=");
      FType t = type();
      expect(";");
      aliases_.insert_or_assign(name, t);
      aliases.insert_or_assign(name, t);
    }
    FTerm m = term();
    expect_end();
    return {std::move(aliases), std::move(m)};
  }

  FType type_only() {
    FType t = type();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, expected, t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
  }

  bool at_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool at_keyword(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

  void expect(std::string_view s) {
    if (!at_symbol(s)) fail("'" + std::string(s) + "'");
    ++pos_;
  }

  void expect_keyword(std::string_view s) {
    if (!at_keyword(s)) fail("'" + std::string(s) + "'");
    ++pos_;
  }

  void expect_end() const {
    if (peek().kind != Tok::End) fail("end of input");
  }

  std::string ident() {
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail("an identifier");
    return toks_[pos_++].text;
  }

  FType type() {
    FType left = sum_type();
    if (at_symbol("->")) {
      ++pos_;
      return FType::arrow(left, type());
    }
    return left;
  }

  FType sum_type() {
    FType t = prod_type();
    while (at_symbol("+")) {
      ++pos_;
      t = FType::sum(t, prod_type());
    }
    return t;
  }

  FType prod_type() {
    FType t = type_atom();
    while (at_symbol("*")) {
      ++pos_;
      t = FType::prod(t, type_atom());
    }
    return t;
  }

  FType type_atom() {
    if (peek().kind == Tok::Number) {
      if (peek().text != "0") fail("a type");
      ++pos_;
      return FType::zero();
    }
    if (at_symbol("(")) {
      ++pos_;
      FType t = type();
      expect(")");
      return t;
    }
    if (at_keyword("mu")) {
      ++pos_;
      std::string x = ident();
      expect(".");
      bound_.push_back(x);
      FType body = type();
      bound_.pop_back();
      return FType::mu(x, body);
    }
    if (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
      std::string x = ident();
      bool is_bound = std::find(bound_.begin(), bound_.end(), x) != bound_.end();
      if (!is_bound) {
        auto it = aliases_.find(x);
        if (it != aliases_.end()) return it->second;
      }
      return FType::var(x);
    }
    fail("a type");
  }

  bool at_atom_start() const {
    const Token& t = peek();
    if (t.kind == Tok::Ident) return t.text != "of" && t.text != "type" && t.text != "mu";
    return t.kind == Tok::Symbol && (t.text == "(" || t.text == "\\");
  }

  FTerm term() {
    FTerm t = atom();
    while (at_atom_start()) t = FTerm::app(t, atom());
    return t;
  }

  FTerm paren_term() {
    expect("(");
    FTerm t = term();
    expect(")");
    return t;
  }

  FTerm atom() {
    if (at_symbol("(")) {
      ++pos_;
      FTerm first = term();
      if (at_symbol(",")) {
        ++pos_;
        FTerm second = term();
        expect(")");
        return FTerm::pair(first, second);
      }
      expect(")");
      return first;
    }
    if (at_symbol("\\")) {
      ++pos_;
      std::string x = ident();
      expect(":");
      FType t = type();
      expect(".");
      return FTerm::lam(x, t, term());
    }
    if (at_keyword("inl") || at_keyword("inr")) {
      bool left = peek().text == "inl";
      ++pos_;
      expect("[");
      FType t = type();
      expect(",");
      FType u = type();
      expect("]");
      FTerm body = paren_term();
      return left ? FTerm::inl(t, u, body) : FTerm::inr(t, u, body);
    }
    if (at_keyword("case")) {
      ++pos_;
      FTerm scrutinee = term();
      expect_keyword("of");
      expect_keyword("inl");
      std::string x = ident();
      expect("=>");
      FTerm left = term();
      expect("|");
      expect_keyword("inr");
      std::string y = ident();
      expect("=>");
      FTerm right = term();
      return FTerm::case_(scrutinee, x, left, y, right);
    }
    if (at_keyword("fst")) {
      ++pos_;
      return FTerm::fst(paren_term());
    }
    if (at_keyword("snd")) {
      ++pos_;
      return FTerm::snd(paren_term());
    }
    if (at_keyword("elim")) {
      ++pos_;
      return FTerm::elim(paren_term());
    }
    if (at_keyword("intro")) {
      ++pos_;
      expect("[");
      FType mu = type();
      expect("]");
      return FTerm::intro(mu, paren_term());
    }
    if (peek().kind == Tok::Ident && !is_keyword(peek().text)) return FTerm::var(ident());
    fail("a term");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, FType> aliases_;
  std::vector<std::string> bound_;
};

}  // namespace

FpcProgram parse_fpc_program(std::string_view text) { return Parser(text).program(); }

FTerm parse_fpc(std::string_view text) { return parse_fpc_program(text).term; }

FType parse_fpc_type(std::string_view text) { return Parser(text).type_only(); }

}  // namespace fpc
