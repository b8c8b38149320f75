#pragma once

#include <string>

#include "whalg/expr.hpp"

namespace whalg {

// Grammar (whitespace-insensitive between tokens):
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := [int '*'] tree ('o' 'eta')*
//   tree    := gen | '[' tree ',' tree ']'
//   gen     := ('s' int)* ('i'|'v'|'a'|'b') int
// Bracket arguments must have pi-degree >= 2.  Errors carry a 1-based column.
Expression parse_expression(const std::string& text);

}  // namespace whalg
