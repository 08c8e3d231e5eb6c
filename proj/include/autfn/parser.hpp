#pragma once

#include <string_view>

#include "autfn/genexpr.hpp"

namespace autfn {

// Parses the CLI expression grammar at rank n:
//   expr := seq
//   seq  := term { term }                 juxtaposition, left-to-right
//   term := atom | term ^ int | [expr, expr] | ( expr ) | term '
//   atom := l(i,j) | r(i,j) | e(i) | p(cycles) | sig(cycles)
//         | iota | z | alpha | beta | theta
// Cycle lists use the usual notation, e.g. p(1 2)(3 4).
//
// Throws ParseError (with position) for syntax, SemanticError for indices
// that are invalid at rank n.
GenExpr::Ptr parse_expr(std::string_view text, int n);

}  // namespace autfn
