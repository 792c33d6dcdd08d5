#pragma once

#include "gdconf/conformal.hpp"

#include <string_view>
#include <vector>

namespace gdconf {

// Element grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*')? unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := p | p/q | T | λ | lambda | basis name | '(' expr ')'
// Juxtaposition multiplies, so "2λ*v" and "(T+1)v" both parse. The
// rendered forms '·' and '−' are accepted for '*' and '-'.
// Throws ParseError on malformed text or unknown names.
std::vector<MPoly> parse_coords(const GDAlgebra& V, std::string_view text);

// Element of H ⊗ V; rejects λ.
ConfElem parse_elem(const GDAlgebra& V, std::string_view text);

}  // namespace gdconf
