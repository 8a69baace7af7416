#ifndef NEVDIFF_FUNCSPEC_HPP
#define NEVDIFF_FUNCSPEC_HPP

#include <string>

#include "nevdiff/funcmodel.hpp"

namespace nevdiff {

// Function mini-grammar, whitespace-insensitive, LL(1):
//   expr  := unit (('*' | '/') unit)*
//   unit  := exp(z^K) | prod(lambda=L) | cossqrt | poly(c0,c1,...)
//          | rat(zeros=[...] (; poles=[...])? (; scale=C)?) | series(name)
// Complex literals: A, A+Bi, A-Bi, Bi, i.
// exp(z^K)*prod(lambda=L) folds into the combined product family.
FunctionModel parse_function_spec(const std::string& text);

Complex parse_complex(const std::string& text);  // same literal syntax, whole string

}  // namespace nevdiff

#endif
