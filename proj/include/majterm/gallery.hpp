#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "majterm/algebra.hpp"

namespace majterm {

// Built-in fixture algebras, selected by a spec string:
//
//   z_mod:<q>     cyclic group of order q, ops +, -, zero
//   klein         the four-group (two-bit xor), ops +, -, zero
//   sym:3         symmetric group on three points, ops *, inv, e
//   chain:<n>     n-element chain lattice, ops meet, join
//   n5            the pentagon lattice (five elements)
//   m3            the diamond lattice (five elements)
//   bare:<n>      n-element set with no operations
//   example4b:<size>:<n>:<m>:<anchor>
//                 the generic single-operation exact-m-majority algebra
//   v35_lattice_witness   two-element chain carrying only the 5-ary
//                         product-of-sums majority operation
//   v35_chain_witness     the same operation over the three-element chain
//   v35_group_witness     the four-group carrying only the 5-ary sum
//
// Throws ParamError for unknown names or bad parameters.
FiniteAlgebra make_gallery_algebra(std::string_view spec);

// The algebra rendered in file format, preceded by a deterministic comment
// header. Identical bytes across runs.
std::string gallery_file(std::string_view spec);

// Human-readable catalog of the accepted spec patterns.
std::vector<std::string> gallery_catalog();

}  // namespace majterm
