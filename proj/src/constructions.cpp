#include "majterm/constructions.hpp"

#include <algorithm>

#include "majterm/errors.hpp"

namespace majterm {

namespace {

void append_copies(std::vector<TermPtr>& args, const TermPtr& t, int count) {
  args.insert(args.end(), static_cast<std::size_t>(count), t);
}

TermPtr fold_left(const std::string& op, const std::vector<TermPtr>& ts) {
  TermPtr acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i)
    acc = Term::app(op, {acc, ts[i]});
  return acc;
}

}  // namespace

TermPtr derive_maltsev(const TermPtr& u, int n, int m) {
  if (n < 1 || m < 1 || m > n)
    throw ParamError("need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  if (2 * m >= n)
    throw ParamError("the Maltsev derivation needs m < n/2, got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + " (n - 2m = " + std::to_string(n - 2 * m) + ")");
  std::vector<TermPtr> args;
  args.reserve(static_cast<std::size_t>(n));
  append_copies(args, Term::var(1), m);
  append_copies(args, Term::var(2), n - 2 * m);
  append_copies(args, Term::var(3), m);
  return substitute(u, args);
}

TermPtr build_lattice_majority_term(int n, int m) {
  if (n < 1 || m < 1 || m > n)
    throw ParamError("need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  if (2 * m <= n)
    throw ParamError("the lattice majority term needs m > n/2, got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n));
  std::vector<TermPtr> meet_blocks;
  std::vector<int> pattern = first_combination(m);
  do {
    std::vector<TermPtr> vars;
    vars.reserve(pattern.size());
    for (int p : pattern) vars.push_back(Term::var(p));
    meet_blocks.push_back(fold_left("join", vars));
  } while (next_combination(pattern, n));
  return fold_left("meet", meet_blocks);
}

TermPtr derive_collapse(const TermPtr& u, int n, int m, int k) {
  if (n < 1 || m < 1 || m > n)
    throw ParamError("need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  if (k < 1) throw ParamError("collapse factor k must be positive, got " + std::to_string(k));
  if (m % k != 0 || n % k != 0)
    throw ParamError("collapse needs k | m and k | n, got k=" + std::to_string(k) +
                     ", m=" + std::to_string(m) + " (m mod k = " + std::to_string(m % k) +
                     "), n=" + std::to_string(n) + " (n mod k = " + std::to_string(n % k) + ")");
  std::vector<TermPtr> args;
  args.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n / k; ++j) append_copies(args, Term::var(j), k);
  return substitute(u, args);
}

TermPtr derive_near_unanimity(const TermPtr& u, int n, int m) {
  if (m >= n)
    throw ParamError("the near-unanimity derivation needs m < n, got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n));
  const int k = n - m;
  if (n % k != 0)
    throw ParamError("the near-unanimity derivation needs (n - m) | n, got n=" +
                     std::to_string(n) + ", n-m=" + std::to_string(k) +
                     " (n mod (n-m) = " + std::to_string(n % k) + ")");
  return derive_collapse(u, n, m, k);
}

TermPtr derive_nu_from_nonexact(const TermPtr& u, int n, int m) {
  if (2 * m <= n || m >= n)
    throw ParamError("this derivation needs n/2 < m < n, got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n));
  std::vector<TermPtr> args;
  args.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= m; ++j) args.push_back(Term::var(j));
  append_copies(args, Term::var(m + 1), n - m);
  return substitute(u, args);
}

GummSystem derive_gumm(const TermPtr& u, int n, int m) {
  if (m >= n)
    throw ParamError("the Gumm derivation needs m < n, got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n));
  if (2 * m <= n)
    throw ParamError("the Gumm derivation needs m > n/2, got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n));
  GummSystem g;
  g.n = n;
  g.m = m;
  g.k = n - m;
  g.h = n % g.k;
  g.ell = n / g.k;

  const TermPtr x = Term::var(1);
  const TermPtr y = Term::var(2);
  const TermPtr z = Term::var(3);

  for (int i = 1; i <= g.ell - 1; ++i) {
    std::vector<TermPtr> args;
    args.reserve(static_cast<std::size_t>(n));
    append_copies(args, x, g.h);
    append_copies(args, x, (g.ell - 1 - i) * g.k);
    append_copies(args, y, g.k);
    append_copies(args, z, i * g.k);
    g.d.push_back(substitute(u, args));
  }
  std::vector<TermPtr> qargs;
  qargs.reserve(static_cast<std::size_t>(n));
  append_copies(qargs, x, g.h);
  append_copies(qargs, y, g.k - g.h);
  append_copies(qargs, z, g.h);
  append_copies(qargs, z, (g.ell - 1) * g.k);
  g.q = substitute(u, qargs);
  return g;
}

std::optional<GummCounterexample> check_gumm_identities(const FiniteAlgebra& alg,
                                                        const GummSystem& g) {
  const TermPtr x = Term::var(1);
  const TermPtr z = Term::var(2);
  struct Id {
    std::string label;
    TermPtr lhs, rhs;
  };
  std::vector<Id> ids;
  const auto d_name = [](std::size_t i) { return "d" + std::to_string(i + 1); };

  // x and z play the identity roles; the middle slot gets whichever of the
  // two the identity dictates.
  ids.push_back({"d1(x,x,z) = x", substitute(g.d.front(), {x, x, z}), x});
  for (std::size_t i = 0; i < g.d.size(); ++i)
    ids.push_back({d_name(i) + "(x,y,x) = x", substitute(g.d[i], {x, z, x}), x});
  for (std::size_t i = 0; i + 1 < g.d.size(); ++i)
    ids.push_back({d_name(i) + "(x,z,z) = " + d_name(i + 1) + "(x,x,z)",
                   substitute(g.d[i], {x, z, z}), substitute(g.d[i + 1], {x, x, z})});
  ids.push_back({d_name(g.d.size() - 1) + "(x,z,z) = q(x,z,z)",
                 substitute(g.d.back(), {x, z, z}), substitute(g.q, {x, z, z})});
  ids.push_back({"q(x,x,z) = z", substitute(g.q, {x, x, z}), z});

  for (const Id& id : ids) {
    if (auto bad = check_identity(alg, *id.lhs, *id.rhs, 2)) {
      return GummCounterexample{id.label, *bad, eval_term(alg, *id.lhs, *bad),
                                eval_term(alg, *id.rhs, *bad)};
    }
  }
  return std::nullopt;
}

std::pair<TermPtr, int> build_group_sum_term(int h, int q, int k, int m) {
  if (h < 1 || q < 1 || k < 0 || m < 1)
    throw ParamError("group sum term needs h >= 1, q >= 1, k >= 0, m >= 1");
  if ((h * m) % q != 1 % q)
    throw ParamError("group sum term needs h*m = 1 (mod q), got h*m = " + std::to_string(h * m) +
                     " = " + std::to_string((h * m) % q) + " (mod " + std::to_string(q) + ")");
  const int n = m + k * q;
  std::vector<TermPtr> summands;
  summands.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(h));
  for (int j = 1; j <= n; ++j) append_copies(summands, Term::var(j), h);
  return {fold_left("+", summands), n};
}

Operation build_generic_majority_operation(int size, int n, int m, int anchor) {
  if (size < 1) throw ParamError("size must be positive");
  if (anchor < 0 || anchor >= size) throw ParamError("anchor outside universe");
  if (n < 1 || m < 1 || m > n)
    throw ParamError("need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  if (2 * m == n && size >= 2)
    throw ParamError("m = n/2 is rejected for size >= 2: both values would occur exactly m times");

  const std::size_t entries = table_size(size, n);
  Operation op{"u", n, std::vector<int>()};
  op.table.reserve(entries);
  std::vector<int> args(static_cast<std::size_t>(n), 0);
  std::vector<int> count(static_cast<std::size_t>(size), 0);
  for (std::size_t row = 0; row < entries; ++row) {
    std::fill(count.begin(), count.end(), 0);
    for (int v : args) ++count[static_cast<std::size_t>(v)];
    int distinct = 0;
    for (int c : count)
      if (c > 0) ++distinct;
    int out = anchor;
    if (distinct == 2) {
      for (int v = 0; v < size; ++v)
        if (count[static_cast<std::size_t>(v)] == m) {
          out = v;  // unique: both values hitting m would force n = 2m
          break;
        }
    } else if (distinct == 1) {
      out = args[0];
    }
    op.table.push_back(out);
    int i = n - 1;
    while (i >= 0 && ++args[static_cast<std::size_t>(i)] == size) args[static_cast<std::size_t>(i--)] = 0;
  }
  return op;
}

}  // namespace majterm
