#pragma once

#include <random>
#include <string>
#include <vector>

#include "majterm/gallery.hpp"
#include "majterm/term.hpp"

namespace testutil {

using majterm::FiniteAlgebra;
using majterm::Term;
using majterm::TermPtr;

inline FiniteAlgebra gal(const std::string& spec) { return majterm::make_gallery_algebra(spec); }

// Left-nested x1 + ... + xk.
inline TermPtr sum_term(int k) {
  TermPtr t = Term::var(1);
  for (int j = 2; j <= k; ++j) t = Term::app("+", {t, Term::var(j)});
  return t;
}

// Random term over the algebra's signature with variables among x1..nvars.
// Deterministic for a given engine state.
inline TermPtr random_term(std::mt19937& rng, const FiniteAlgebra& alg, int nvars, int depth) {
  std::uniform_int_distribution<int> var_pick(1, nvars);
  if (alg.operations().empty() || depth == 0 ||
      std::uniform_int_distribution<int>(0, 2)(rng) == 0)
    return Term::var(var_pick(rng));
  std::uniform_int_distribution<std::size_t> op_pick(0, alg.operations().size() - 1);
  const majterm::Operation& op = alg.operations()[op_pick(rng)];
  std::vector<TermPtr> children;
  for (int i = 0; i < op.arity; ++i) children.push_back(random_term(rng, alg, nvars, depth - 1));
  return Term::app(op.name, std::move(children));
}

}  // namespace testutil
