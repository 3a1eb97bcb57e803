#pragma once

#include "truthpred/base_formula.hpp"
#include "truthpred/sentence.hpp"

#include <string_view>

namespace truthpred {

/// Concrete grammar (whitespace between tokens is free):
///
///   sentence := unary [binop unary]
///   binop    := "|" | "&" | "->" | "<->"
///   unary    := "!" unary | "(" sentence ")" | atom
///   atom     := "T(" decimal ")" | "Ex T(x)" | "Ax T(x)" | "Ex !T(x)" | "Ax !T(x)" | base-atom
///
///   base-atom := "(" ("A"|"E") var "<" term ")" "(" base ")" | term ("="|"<") term
///   base      := same shape as sentence over base atoms, variables allowed
///   term      := prod ("+" prod)* ;  prod := unit ("*" unit)*
///   unit      := decimal | var | "S(" term ")" | "(" term ")"
///
/// A binary compound never chains: "(a) | (b) | (c)" is rejected.
///
/// Throws ParseError (BaseSyntaxError inside the arithmetic fragment) and
/// OpenFormulaError for a base atom with free variables.
Sentence parse_sentence(std::string_view text);

/// Parses a base formula; free variables are allowed.
BaseFormula parse_base_formula(std::string_view text);

}  // namespace truthpred
