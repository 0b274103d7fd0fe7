#pragma once

#include <optional>
#include <vector>

#include "majterm/algebra.hpp"
#include "majterm/term.hpp"

namespace majterm {

// Value of x_{i+1} at position i. Must cover every variable of the term
// being evaluated.
using Assignment = std::vector<int>;

// Structural-recursion evaluation, memoized on shared nodes. Throws EvalError
// for unknown symbols, arity mismatches, unassigned variables and
// out-of-universe assignment values.
int eval_term(const FiniteAlgebra& alg, const Term& t, const Assignment& sigma);

// Tabulates a term with variables among x1..x_arity into a basic operation.
Operation tabulate_term(const FiniteAlgebra& alg, const Term& t, int arity, std::string name);

struct MajorityCounterexample {
  std::vector<int> pattern;  // positions J, ascending, 1-based
  int a = 0, b = 0;          // J positions were set to a, the rest to b
  int got = 0, want = 0;     // want is always a
};

struct MajorityVerdict {
  std::optional<MajorityCounterexample> counterexample;
  bool passed() const { return !counterexample.has_value(); }
  explicit operator bool() const { return passed(); }
};

// Does u behave as an n-ary exact-m-majority term on alg? Tests every m-subset
// J of {1..n} and every (a,b) in A^2, a = b included (which makes idempotence
// an automatic part of the check). On failure returns the first
// counterexample, J enumerated lexicographically as sorted position sets and
// (a,b) lexicographically. Requires 1 <= m <= n and vars(u) within x1..xn.
MajorityVerdict check_exact_majority(const FiniteAlgebra& alg, const Term& u, int n, int m);

// The non-exact variant: the value occurring at least m times must win.
// Tests every J with |J| >= m (|J| ascending, then lexicographic). Only
// defined for n/2 < m <= n; anything else is rejected with ParamError.
MajorityVerdict check_m_majority(const FiniteAlgebra& alg, const Term& u, int n, int m);

// Exhaustively tests lhs = rhs over all size^nvars assignments (last variable
// varying fastest) and returns the first failing assignment, or nullopt.
std::optional<Assignment> check_identity(const FiniteAlgebra& alg, const Term& lhs,
                                         const Term& rhs, int nvars);

// Lexicographic enumeration of m-subsets of {1..n} as sorted vectors:
// first_combination(m) = {1..m}; next_combination advances in place and
// returns false after the last subset.
std::vector<int> first_combination(int m);
bool next_combination(std::vector<int>& c, int n);

}  // namespace majterm
