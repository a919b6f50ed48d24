#pragma once

// Text form of algebra values.
//
// Rendering grammar (one line, deterministic):
//
//   polynomial := "0" | term { " + " term }
//   term       := "(" rational ")" [ "*i" ] [ "*hbar" [ "^" int ] ] { "*" symbol [ "^" int ] }
//   rational   := ["-"] digits [ "/" digits ]
//   symbol     := q | p | lq | lp                 (ndof == 1)
//               | q<j> | p<j> | lq<j> | lp<j>      (ndof > 1, j = 1..ndof)
//
// A term whose coefficient has both a real and an imaginary part is written
// as two terms. Terms follow the canonical monomial order (exponent vectors
// compared lexicographically in the slot order q, p, lq, lp, so the constant
// comes first), then the hbar power, then real before imaginary. Examples:
//
//   (-1/4)*hbar^2*q*lp^3
//   (-1)*i + (1)*q*lq
//
// The parser accepts a superset: any expression built from rational
// literals, symbols, i, hbar, parentheses, + - * and ^ with a non-negative
// integer exponent, and / by a nonzero rational constant. Operator products
// are taken in written order and normal-ordered, so "lq*q" parses to
// "(-1)*i + (1)*q*lq". The classical parser admits only q and p symbols.

#include <string>
#include <string_view>

#include "kvn/algebra/classical_polynomial.hpp"
#include "kvn/algebra/operator_polynomial.hpp"

namespace kvn::algebra {

std::string symbol_name(PhaseIndex idx, int ndof);

std::string render(const OperatorPolynomial& a);
std::string render(const ClassicalPolynomial& f);

// Errors: ParseError (a ConfigError subclass) for syntax problems,
// UnsupportedInputError for non-polynomial constructs, DegreeOverflowError
// from runaway products.
OperatorPolynomial parse_operator(std::string_view text, int ndof);
ClassicalPolynomial parse_classical(std::string_view text, int ndof);

}  // namespace kvn::algebra
