#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpc/term.hpp"

namespace fpc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& expected, const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A parsed .fpc file: type aliases followed by one term. Aliases are
/// expanded during parsing.
///
///   file  ::= { "type" ident "=" type ";" } term
///   term  ::= atom { atom }                        application, left-assoc
///   atom  ::= ident | "(" term ")" | "(" term "," term ")"
///           | "\" ident ":" type "." term
///           | "inl" "[" type "," type "]" "(" term ")"   likewise inr
///           | "case" term "of" "inl" ident "=>" term "|" "inr" ident "=>" term
///           | "fst" "(" term ")" | "snd" "(" term ")" | "elim" "(" term ")"
///           | "intro" "[" type "]" "(" term ")"
///   type  ::= sum [ "->" type ]
///   sum   ::= prod { "+" prod }
///   prod  ::= tatom { "*" tatom }
///   tatom ::= ident | "0" | "(" type ")" | "mu" ident "." type
struct FpcProgram {
  std::map<std::string, FType> aliases;
  FTerm term;
};

FpcProgram parse_fpc_program(std::string_view text);
FTerm parse_fpc(std::string_view text);
FType parse_fpc_type(std::string_view text);

}  // namespace fpc
