#ifndef NEVDIFF_EQPARSE_HPP
#define NEVDIFF_EQPARSE_HPP

#include <string>

#include "nevdiff/diffops.hpp"

namespace nevdiff {

// Equation text, exact integers/rationals only. Two styles:
//
//   line style:    P[2] = z          (difference form; Q[...] for shift form)
//                  P[0] = -1
//
//   expression:    (z)*D2 + (1-z)*D0 = 0     or    (1)*S1 + (-z)*S0
//
// Polynomial factors use + - * ^ over z, integers and p/q rationals.
// A trailing "= 0" is optional. D and S markers must not be mixed.
LinearDifferenceEquation parse_equation(const std::string& text);

// Polynomial sub-grammar alone (used by tests and the CLI).
RatPoly parse_ratpoly(const std::string& text);

std::string equation_to_string(const LinearDifferenceEquation& eq);

}  // namespace nevdiff

#endif
