#include "majterm/subpower.hpp"

#include <algorithm>
#include <set>

#include "majterm/checks.hpp"
#include "majterm/errors.hpp"

namespace majterm {

namespace {

struct Closure {
  Subpower sp;
  std::size_t cap;
  const PowerTuple* target = nullptr;
  std::optional<std::uint32_t> target_index;

  // Returns the element's index; records the first derivation only.
  std::uint32_t insert(const PowerTuple& t, DerivationDag::Node node) {
    auto it = sp.index.find(t);
    if (it != sp.index.end()) return it->second;
    if (sp.elements.size() >= cap)
      throw ClosureOverflow("subpower closure exceeded cap of " + std::to_string(cap) + " tuples",
                            cap);
    const auto idx = static_cast<std::uint32_t>(sp.elements.size());
    sp.elements.push_back(t);
    sp.dag.nodes.push_back(std::move(node));
    sp.index.emplace(t, idx);
    if (target && !target_index && t == *target) target_index = idx;
    return idx;
  }

  bool done() const { return target && target_index; }
};

Closure close(const FiniteAlgebra& alg, const std::vector<PowerTuple>& generators,
              std::size_t cap, const PowerTuple* target) {
  if (generators.empty()) throw ParamError("generate_subpower: need at least one generator");
  if (alg.size() > 255) throw ParamError("universe too large for power tuples (max 255)");
  const std::size_t len = generators[0].size();
  for (const PowerTuple& g : generators) {
    if (g.size() != len)
      throw ParamError("generate_subpower: generator length mismatch (" + std::to_string(g.size()) +
                       " vs " + std::to_string(len) + ")");
    for (std::uint8_t v : g)
      if (v >= alg.size())
        throw ParamError("generate_subpower: generator entry outside universe");
  }
  if (target && target->size() != len)
    throw ParamError("generate_subpower: target length mismatch");

  Closure cl{Subpower{}, cap, target, std::nullopt};
  for (const Operation& op : alg.operations()) cl.sp.dag.op_names.push_back(op.name);

  for (std::size_t j = 0; j < generators.size(); ++j) {
    cl.insert(generators[j], DerivationDag::Node{-1, static_cast<int>(j) + 1, {}});
    if (cl.done()) return cl;
  }
  for (std::size_t oi = 0; oi < alg.operations().size(); ++oi) {
    const Operation& op = alg.operations()[oi];
    if (op.arity != 0) continue;
    PowerTuple t(len, static_cast<std::uint8_t>(op.table[0]));
    cl.insert(t, DerivationDag::Node{static_cast<int>(oi), 0, {}});
    if (cl.done()) return cl;
  }

  const int size = alg.size();
  PowerTuple scratch(len);
  std::vector<const std::uint8_t*> argp;
  std::size_t layer_start = 0;
  std::size_t layer_end = cl.sp.elements.size();
  while (layer_start < layer_end) {
    for (std::size_t oi = 0; oi < alg.operations().size(); ++oi) {
      const Operation& op = alg.operations()[oi];
      const int r = op.arity;
      if (r == 0) continue;
      // Argument indices run over [0, layer_end)^r in lexicographic order,
      // last position fastest; combinations made entirely of previous-layer
      // elements were already processed in an earlier round.
      std::vector<std::uint32_t> idx(static_cast<std::size_t>(r), 0);
      while (true) {
        bool has_new = false;
        for (std::uint32_t i : idx)
          if (i >= layer_start) { has_new = true; break; }
        if (has_new) {
          argp.clear();
          for (std::uint32_t i : idx) argp.push_back(cl.sp.elements[i].data());
          for (std::size_t c = 0; c < len; ++c) {
            std::size_t pos = 0;
            for (int a = 0; a < r; ++a)
              pos = pos * static_cast<std::size_t>(size) + argp[a][c];
            scratch[c] = static_cast<std::uint8_t>(op.table[pos]);
          }
          cl.insert(scratch,
                    DerivationDag::Node{static_cast<int>(oi), 0,
                                        std::vector<std::uint32_t>(idx.begin(), idx.end())});
          if (cl.done()) return cl;
        }
        int a = r - 1;
        while (a >= 0 && ++idx[a] == layer_end) idx[a--] = 0;
        if (a < 0) break;
      }
    }
    layer_start = layer_end;
    layer_end = cl.sp.elements.size();
  }
  return cl;
}

}  // namespace

Subpower generate_subpower(const FiniteAlgebra& alg, const std::vector<PowerTuple>& generators,
                           std::size_t cap) {
  return close(alg, generators, cap, nullptr).sp;
}

std::pair<Subpower, std::optional<std::uint32_t>> generate_subpower_until(
    const FiniteAlgebra& alg, const std::vector<PowerTuple>& generators, std::size_t cap,
    const PowerTuple& target) {
  Closure cl = close(alg, generators, cap, &target);
  return {std::move(cl.sp), cl.target_index};
}

TermPtr extract_witness(const Subpower& sp, const PowerTuple& target) {
  const auto found = sp.find(target);
  if (!found) throw ParamError("extract_witness: target not in the closed set");
  const std::uint32_t goal = *found;
  std::vector<TermPtr> terms(goal + 1);
  for (std::uint32_t i = 0; i <= goal; ++i) {
    const DerivationDag::Node& node = sp.dag.nodes[i];
    if (node.op < 0) {
      terms[i] = Term::var(node.generator);
    } else {
      std::vector<TermPtr> children;
      children.reserve(node.parents.size());
      for (std::uint32_t p : node.parents) children.push_back(terms[p]);
      terms[i] = Term::app(sp.dag.op_names[static_cast<std::size_t>(node.op)],
                           std::move(children));
    }
  }
  return terms[goal];
}

CoordinateSet CoordinateSet::build(int n, int m, int size, bool dedup) {
  if (n < 1 || m < 1 || m > n)
    throw ParamError("need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  CoordinateSet ks;
  ks.n = n;
  ks.m = m;
  ks.size = size;
  std::set<std::vector<int>> seen;  // generator column + target entry
  std::vector<int> pattern = first_combination(m);
  do {
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b) {
        if (dedup) {
          std::vector<int> column(static_cast<std::size_t>(n) + 1, b);
          for (int p : pattern) column[static_cast<std::size_t>(p) - 1] = a;
          column[static_cast<std::size_t>(n)] = a;
          if (!seen.insert(std::move(column)).second) continue;
        }
        ks.coords.push_back(Coordinate{pattern, a, b});
      }
    }
  } while (next_combination(pattern, n));
  return ks;
}

std::vector<PowerTuple> CoordinateSet::generators() const {
  std::vector<PowerTuple> gens(static_cast<std::size_t>(n),
                               PowerTuple(coords.size()));
  for (std::size_t c = 0; c < coords.size(); ++c) {
    const Coordinate& k = coords[c];
    for (int j = 1; j <= n; ++j) {
      const bool in_pattern = std::binary_search(k.pattern.begin(), k.pattern.end(), j);
      gens[static_cast<std::size_t>(j) - 1][c] =
          static_cast<std::uint8_t>(in_pattern ? k.a : k.b);
    }
  }
  return gens;
}

PowerTuple CoordinateSet::target() const {
  PowerTuple t(coords.size());
  for (std::size_t c = 0; c < coords.size(); ++c)
    t[c] = static_cast<std::uint8_t>(coords[c].a);
  return t;
}

FindResult find_exact_majority_term(const FiniteAlgebra& alg, int n, int m, std::size_t cap,
                                    bool dedup_coordinates) {
  if (n < 1 || m < 1 || m > n)
    throw ParamError("need 1 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  FindResult res;
  if (n % 2 == 0 && 2 * m == n && alg.size() >= 2) {
    // The patterns {1..m} with (0,1) and {m+1..n} with (1,0) describe the same
    // argument tuple but demand outputs 0 and 1; no term can satisfy both.
    std::vector<int> lo = first_combination(m);
    std::vector<int> hi(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) hi[static_cast<std::size_t>(i)] = m + 1 + i;
    res.status = FindResult::Status::trivial_only;
    res.conflict = TrivialConflict{Coordinate{lo, 0, 1}, Coordinate{hi, 1, 0}};
    return res;
  }
  const CoordinateSet ks = CoordinateSet::build(n, m, alg.size(), dedup_coordinates);
  res.coordinate_count = ks.coords.size();
  const PowerTuple target = ks.target();
  try {
    auto [sp, hit] = generate_subpower_until(alg, ks.generators(), cap, target);
    res.closure_size = sp.elements.size();
    if (hit) {
      res.status = FindResult::Status::found;
      res.witness = extract_witness(sp, target);
    } else {
      res.status = FindResult::Status::not_found;
    }
  } catch (const ClosureOverflow&) {
    res.status = FindResult::Status::overflow;
    res.closure_size = cap;
  }
  return res;
}

std::vector<PowerTuple> enumerate_term_operations(const FiniteAlgebra& alg, int arity,
                                                  std::size_t cap) {
  if (arity < 1) throw ParamError("enumerate_term_operations: arity must be at least 1");
  const std::size_t len = table_size(alg.size(), arity);
  std::vector<PowerTuple> projections(static_cast<std::size_t>(arity), PowerTuple(len));
  for (std::size_t c = 0; c < len; ++c) {
    std::size_t rest = c;
    for (int j = arity - 1; j >= 0; --j) {
      projections[static_cast<std::size_t>(j)][c] =
          static_cast<std::uint8_t>(rest % static_cast<std::size_t>(alg.size()));
      rest /= static_cast<std::size_t>(alg.size());
    }
  }
  Subpower sp = generate_subpower(alg, projections, cap);
  std::vector<PowerTuple> tables = std::move(sp.elements);
  std::sort(tables.begin(), tables.end());
  return tables;
}

}  // namespace majterm
