#pragma once

#include <optional>
#include <string>
#include <utility>

#include "majterm/checks.hpp"
#include "majterm/term.hpp"

namespace majterm {

// All functions here are pure term-to-term rewrites: `u` is a term over
// variables x1..xn and the result plugs a fixed slot layout into u. Whether
// the derived term has the promised property on a concrete algebra is checked
// separately (check_exact_majority / check_identity / the Gumm suite).

// From an n-ary exact-m-majority term with m < n/2, the ternary term
// t(x,y,z) = u(x...x, y...y, z...z) with slot counts m, n-2m, m satisfies
// t(x,z,z) = x and t(x,x,z) = z.
TermPtr derive_maltsev(const TermPtr& u, int n, int m);

// Product of sums over the {meet, join} signature: the left-nested meet over
// all m-subsets J of {1..n} (lexicographic) of the left-nested join of the
// variables in J. In any lattice this is an m-majority term for m > n/2.
TermPtr build_lattice_majority_term(int n, int m);

// Identifies variables in blocks of k: t(x1..x_{n/k}) = u(x1^k, ..., x_{n/k}^k).
// Requires k to divide both m and n; sends exact-(n,m) to exact-(n/k, m/k).
TermPtr derive_collapse(const TermPtr& u, int n, int m, int k);

// The collapse with k = n-m; the result has arity n/(n-m) and is a
// near-unanimity term there (exact majority at one below its arity).
TermPtr derive_near_unanimity(const TermPtr& u, int n, int m);

// From a non-exact m-majority term with n/2 < m < n:
// v(x1..x_{m+1}) = u(x1, ..., xm, x_{m+1}, ..., x_{m+1}) is an (m+1)-ary
// near-unanimity term. The m-majority premise on the target algebra is the
// caller's to verify (check_m_majority).
TermPtr derive_nu_from_nonexact(const TermPtr& u, int n, int m);

// Directed Gumm system derived from an n-ary exact-m-majority term with
// m > n/2. With k = n-m, h = n mod k and ell = n/k (integer division,
// ell >= 2):
//   d_i(x,y,z) = u(x^h, x^k ... x^k, y^k, z^k ... z^k)   with ell-1-i x-blocks
//                and i z-blocks, for 1 <= i <= ell-1;
//   q(x,y,z)   = u(x^h, y^{k-h}, z^h, z^k ... z^k)       with ell-1 z-blocks.
// h = 0 simply omits the x^h / z^h slots.
struct GummSystem {
  std::vector<TermPtr> d;  // d[i] is d_{i+1}
  TermPtr q;
  int n = 0, m = 0, k = 0, h = 0, ell = 0;
};

GummSystem derive_gumm(const TermPtr& u, int n, int m);

struct GummCounterexample {
  std::string identity;   // e.g. "d1(x,z,z) = d2(x,x,z)"
  Assignment assignment;  // values for the identity's variables
  int lhs = 0, rhs = 0;
};

// Exhaustively verifies the directed Gumm identities on alg:
//   d_1(x,x,z) = x;  d_i(x,y,x) = x;  d_i(x,z,z) = d_{i+1}(x,x,z);
//   d_{ell-1}(x,z,z) = q(x,z,z);  q(x,x,z) = z.
// Returns the first failure in that order, or nullopt.
std::optional<GummCounterexample> check_gumm_identities(const FiniteAlgebra& alg,
                                                        const GummSystem& g);

// The sum h*x1 + h*x2 + ... + h*xn over the binary symbol "+", left-nested,
// where n = m + k*q. Requires h*m = 1 (mod q); on any abelian group of
// exponent dividing q this is an n-ary exact-m-majority term. Returns the
// term together with n.
std::pair<TermPtr, int> build_group_sum_term(int h, int q, int k, int m);

// The three-clause n-ary operation every set admits for m != n/2: the value
// occurring exactly m times when exactly two values occur, the common value
// when all arguments agree, and the anchor element otherwise. Named "u".
Operation build_generic_majority_operation(int size, int n, int m, int anchor);

}  // namespace majterm
