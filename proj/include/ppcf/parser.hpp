#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ppcf/term.hpp"

namespace ppcf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Parses one pPCF term. `#` starts a line comment.
///
///   term   ::= choice
///   choice ::= app [ "(+" rat ")" app ]          non-associative
///   app    ::= atom { atom }                     left-associative
///   atom   ::= nat | ident | "coin" "(" rat ")" | "succ" "(" term ")"
///            | "if" "(" term "," term "," ident "." term ")"
///            | "fix" "(" term ")" | "(" term ")"
///            | "\" ident ":" type "." term       body extends to the right
///            | "let" ident "=" term "in" term    body extends to the right
///   type   ::= "nat" | "(" type ")" | type "->" type   right-associative
///   rat    ::= integer [ "/" integer ]           must lie in [0,1]
Term parse(std::string_view text);

PType parse_type(std::string_view text);

}  // namespace ppcf
