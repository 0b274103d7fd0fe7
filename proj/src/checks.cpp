#include "majterm/checks.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "majterm/errors.hpp"

namespace majterm {

namespace {

int eval_memo(const FiniteAlgebra& alg, const Term& root, const Assignment& sigma,
              std::unordered_map<const Term*, int>& memo) {
  // Iterative post-order so deeply nested terms cannot blow the stack.
  std::vector<const Term*> stack{&root};
  std::vector<int> args;
  while (!stack.empty()) {
    const Term* cur = stack.back();
    if (memo.count(cur)) {
      stack.pop_back();
      continue;
    }
    if (cur->is_var()) {
      const int i = cur->var_index();
      if (i > static_cast<int>(sigma.size()))
        throw EvalError("unassigned variable x" + std::to_string(i));
      const int v = sigma[i - 1];
      if (v < 0 || v >= alg.size())
        throw EvalError("assignment value " + std::to_string(v) + " for x" + std::to_string(i) +
                        " outside universe 0.." + std::to_string(alg.size() - 1));
      memo.emplace(cur, v);
      stack.pop_back();
      continue;
    }
    const Operation* op = alg.find_operation(cur->op_name());
    if (!op)
      throw EvalError("unknown operation symbol '" + cur->op_name() + "' in algebra '" +
                      alg.name() + "'");
    if (static_cast<int>(cur->children().size()) != op->arity)
      throw EvalError("operation '" + op->name + "' expects " + std::to_string(op->arity) +
                      " arguments, got " + std::to_string(cur->children().size()));
    bool ready = true;
    for (const TermPtr& c : cur->children()) {
      if (!memo.count(c.get())) {
        stack.push_back(c.get());
        ready = false;
      }
    }
    if (!ready) continue;
    args.clear();
    for (const TermPtr& c : cur->children()) args.push_back(memo.at(c.get()));
    memo.emplace(cur, op->apply(alg.size(), args));
    stack.pop_back();
  }
  return memo.at(&root);
}

// Shared worker: tests the majority rule for every listed pattern size.
MajorityVerdict check_patterns(const FiniteAlgebra& alg, const Term& u, int n,
                               const std::vector<int>& pattern_sizes) {
  const int s = alg.size();
  Assignment sigma(static_cast<std::size_t>(n));
  for (int j : pattern_sizes) {
    std::vector<int> pattern = first_combination(j);
    do {
      for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
          std::fill(sigma.begin(), sigma.end(), b);
          for (int p : pattern) sigma[p - 1] = a;
          const int got = eval_term(alg, u, sigma);
          if (got != a)
            return {MajorityCounterexample{pattern, a, b, got, a}};
        }
      }
    } while (next_combination(pattern, n));
  }
  return {};
}

void require_vars_within(const Term& u, int n) {
  if (u.max_var_index() > n)
    throw ParamError("term uses x" + std::to_string(u.max_var_index()) +
                     " but only x1..x" + std::to_string(n) + " are allowed");
}

}  // namespace

int eval_term(const FiniteAlgebra& alg, const Term& t, const Assignment& sigma) {
  std::unordered_map<const Term*, int> memo;
  return eval_memo(alg, t, sigma, memo);
}

Operation tabulate_term(const FiniteAlgebra& alg, const Term& t, int arity, std::string name) {
  require_vars_within(t, arity);
  const std::size_t entries = table_size(alg.size(), arity);
  Operation op{std::move(name), arity, std::vector<int>()};
  op.table.reserve(entries);
  Assignment sigma(static_cast<std::size_t>(arity), 0);
  for (std::size_t row = 0; row < entries; ++row) {
    op.table.push_back(eval_term(alg, t, sigma));
    int i = arity - 1;
    while (i >= 0 && ++sigma[i] == alg.size()) sigma[i--] = 0;
  }
  return op;
}

MajorityVerdict check_exact_majority(const FiniteAlgebra& alg, const Term& u, int n, int m) {
  if (n < 1) throw ParamError("n must be at least 1, got " + std::to_string(n));
  if (m < 1 || m > n)
    throw ParamError("need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  require_vars_within(u, n);
  return check_patterns(alg, u, n, {m});
}

MajorityVerdict check_m_majority(const FiniteAlgebra& alg, const Term& u, int n, int m) {
  if (n < 1) throw ParamError("n must be at least 1, got " + std::to_string(n));
  if (m > n || 2 * m <= n)
    throw ParamError("the non-exact majority check needs n/2 < m <= n, got m=" +
                     std::to_string(m) + ", n=" + std::to_string(n));
  require_vars_within(u, n);
  std::vector<int> sizes(static_cast<std::size_t>(n - m + 1));
  std::iota(sizes.begin(), sizes.end(), m);
  return check_patterns(alg, u, n, sizes);
}

std::optional<Assignment> check_identity(const FiniteAlgebra& alg, const Term& lhs,
                                         const Term& rhs, int nvars) {
  if (nvars < 0) throw ParamError("nvars must be non-negative");
  require_vars_within(lhs, nvars);
  require_vars_within(rhs, nvars);
  const std::size_t entries = table_size(alg.size(), nvars);
  Assignment sigma(static_cast<std::size_t>(nvars), 0);
  for (std::size_t row = 0; row < entries; ++row) {
    if (eval_term(alg, lhs, sigma) != eval_term(alg, rhs, sigma)) return sigma;
    int i = nvars - 1;
    while (i >= 0 && ++sigma[i] == alg.size()) sigma[i--] = 0;
  }
  return std::nullopt;
}

std::vector<int> first_combination(int m) {
  std::vector<int> c(static_cast<std::size_t>(m));
  std::iota(c.begin(), c.end(), 1);
  return c;
}

bool next_combination(std::vector<int>& c, int n) {
  const int m = static_cast<int>(c.size());
  for (int i = m - 1; i >= 0; --i) {
    if (c[i] < n - (m - 1 - i)) {
      ++c[i];
      for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace majterm
