#pragma once

#include <iosfwd>
#include <string>

#include "majterm/algebra.hpp"

namespace majterm {

// Text format for finite algebras:
//
//   algebra <name>
//   size <k>
//   op <name> <arity>
//   <size^arity entries, whitespace separated, last argument fastest>
//   ...
//
// `#` starts a comment running to end of line. Errors carry 1-based line
// numbers. save_algebra emits a canonical layout (rows of `size` entries),
// so save(load(f)) is stable byte-for-byte.
FiniteAlgebra load_algebra(std::istream& in);
FiniteAlgebra load_algebra_file(const std::string& path);

std::string save_algebra(const FiniteAlgebra& alg);
void save_algebra_file(const FiniteAlgebra& alg, const std::string& path);

}  // namespace majterm
