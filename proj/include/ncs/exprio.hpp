#pragma once

#include <string>

#include "ncs/frt.hpp"
#include "ncs/matrix.hpp"
#include "ncs/presentation.hpp"

namespace ncs {

// Expression grammar (the artifact's text interface):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)?
//   atom   := integer | 'q' | 'p' | 's' | generator | '(' expr ')' | '-' atom
// '*' is mandatory between factors. '/' divides by a scalar subexpression;
// '^' with a negative exponent requires a scalar base (rejected on
// generators). Unicode xi/eta/zeta are accepted as input aliases.

// Parse against a presentation's generator names; the result is reduced.
NCPoly parse_element(const std::string& text, const Presentation& P);

// Parse a pure coefficient (no generators allowed).
ParamScalar parse_scalar(const std::string& text);

// Row-major bracketed form "[[e, e, ...], ...]"; entries reduced.
AlgMatrix parse_matrix(const std::string& text, const Presentation& P);

// R-matrix file: '#' comments, a dimension line n, then n^4 scalar entries
// one per line, rows (i,j) by columns (k,l), row-major.
RMatrix parse_rmatrix(const std::string& text);

std::string format_scalar(const ParamScalar& c);
std::string format_element(const NCPoly& a, const Presentation& P);
std::string format_word(const Word& w, const Presentation& P);
std::string format_matrix(const AlgMatrix& A);
std::string format_rmatrix(const RMatrix& R);

} // namespace ncs
