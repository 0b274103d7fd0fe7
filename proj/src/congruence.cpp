#include "majterm/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "majterm/errors.hpp"
#include "majterm/subpower.hpp"

namespace majterm {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }

  // Leaders as least block elements.
  std::vector<int> canonical() {
    const int n = static_cast<int>(parent.size());
    std::vector<int> leaders(parent.size());
    std::vector<int> first(parent.size(), -1);
    for (int e = 0; e < n; ++e) {
      const int r = find(e);
      if (first[static_cast<std::size_t>(r)] < 0) first[static_cast<std::size_t>(r)] = e;
      leaders[static_cast<std::size_t>(e)] = first[static_cast<std::size_t>(r)];
    }
    return leaders;
  }
};

// Relation composition of partitions viewed as relations on {0..n-1}:
// (x, z) with x ~alpha~ y ~beta~ z for some y.
std::vector<bool> compose(const Partition& alpha, const Partition& beta) {
  const int n = alpha.size();
  std::vector<bool> rel(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!alpha.same_block(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (beta.same_block(y, z))
          rel[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(z)] = true;
    }
  return rel;
}

}  // namespace

Partition::Partition(std::vector<int> leaders) : leaders_(std::move(leaders)) {
  for (int e = 0; e < size(); ++e) {
    const int l = leaders_[static_cast<std::size_t>(e)];
    if (l < 0 || l > e || leaders_[static_cast<std::size_t>(l)] != l)
      throw ParamError("partition leaders not in canonical least-element form");
  }
}

Partition Partition::identity(int n) {
  std::vector<int> l(static_cast<std::size_t>(n));
  std::iota(l.begin(), l.end(), 0);
  return Partition(std::move(l));
}

Partition Partition::single_block(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> l(static_cast<std::size_t>(n), -1);
  for (const auto& block : blocks) {
    if (block.empty()) throw ParamError("empty block");
    const int leader = *std::min_element(block.begin(), block.end());
    for (int e : block) {
      if (e < 0 || e >= n) throw ParamError("block element outside universe");
      if (l[static_cast<std::size_t>(e)] != -1) throw ParamError("element in two blocks");
      l[static_cast<std::size_t>(e)] = leader;
    }
  }
  for (int e = 0; e < n; ++e)
    if (l[static_cast<std::size_t>(e)] == -1)
      throw ParamError("element " + std::to_string(e) + " missing from blocks");
  return Partition(std::move(l));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::map<int, std::vector<int>> by_leader;
  for (int e = 0; e < size(); ++e) by_leader[leader(e)].push_back(e);
  std::vector<std::vector<int>> out;
  out.reserve(by_leader.size());
  for (auto& [l, block] : by_leader) out.push_back(std::move(block));
  return out;
}

int Partition::block_count() const {
  int c = 0;
  for (int e = 0; e < size(); ++e)
    if (leader(e) == e) ++c;
  return c;
}

bool Partition::refines(const Partition& coarser) const {
  for (int e = 0; e < size(); ++e)
    if (!coarser.same_block(e, leader(e))) return false;
  return true;
}

Partition Partition::meet(const Partition& other) const {
  std::vector<int> l(leaders_.size());
  std::map<std::pair<int, int>, int> firsts;
  for (int e = 0; e < size(); ++e)
    l[static_cast<std::size_t>(e)] = firsts.try_emplace({leader(e), other.leader(e)}, e).first->second;
  return Partition(std::move(l));
}

Partition Partition::join(const Partition& other) const {
  Dsu dsu(size());
  for (int e = 0; e < size(); ++e) {
    dsu.unite(e, leader(e));
    dsu.unite(e, other.leader(e));
  }
  return Partition(dsu.canonical());
}

std::string Partition::to_string() const {
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out += ',';
    first_block = false;
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  out += '}';
  return out;
}

bool is_congruence(const FiniteAlgebra& alg, const Partition& p) {
  if (p.size() != alg.size()) throw ParamError("partition size does not match algebra");
  const int s = alg.size();
  for (const Operation& op : alg.operations()) {
    const int r = op.arity;
    if (r == 0) continue;
    std::vector<int> args(static_cast<std::size_t>(r), 0);
    while (true) {
      const int base = op.apply(s, args);
      for (int pos = 0; pos < r; ++pos) {
        const int old = args[static_cast<std::size_t>(pos)];
        for (int c = 0; c < s; ++c) {
          if (c == old || !p.same_block(c, old)) continue;
          args[static_cast<std::size_t>(pos)] = c;
          const int changed = op.apply(s, args);
          args[static_cast<std::size_t>(pos)] = old;
          if (!p.same_block(base, changed)) return false;
        }
      }
      int i = r - 1;
      while (i >= 0 && ++args[static_cast<std::size_t>(i)] == s) args[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
    }
  }
  return true;
}

Partition principal_congruence(const FiniteAlgebra& alg, int a, int b) {
  const int n = alg.size();
  if (a < 0 || a >= n || b < 0 || b >= n) throw ParamError("pair outside universe");
  std::vector<PowerTuple> gens;
  gens.reserve(static_cast<std::size_t>(n) + 2);
  for (int e = 0; e < n; ++e)
    gens.push_back(PowerTuple{static_cast<std::uint8_t>(e), static_cast<std::uint8_t>(e)});
  gens.push_back(PowerTuple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
  gens.push_back(PowerTuple{static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a)});
  // The pair subalgebra has at most n^2 elements, so the cap never binds.
  Subpower sp = generate_subpower(alg, gens, static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  Dsu dsu(n);
  for (const PowerTuple& t : sp.elements) dsu.unite(t[0], t[1]);
  return Partition(dsu.canonical());
}

bool CongruenceLattice::contains(const Partition& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

CongruenceLattice congruence_lattice(const FiniteAlgebra& alg, std::size_t cap) {
  const int n = alg.size();
  std::set<Partition> done;
  done.insert(Partition::identity(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) done.insert(principal_congruence(alg, a, b));

  // Join-closure to fixpoint; every congruence is a join of principals.
  std::vector<Partition> worklist(done.begin(), done.end());
  while (!worklist.empty()) {
    const Partition current = std::move(worklist.back());
    worklist.pop_back();
    for (const Partition& other : std::vector<Partition>(done.begin(), done.end())) {
      Partition j = current.join(other);
      if (done.insert(j).second) {
        if (done.size() > cap)
          throw ClosureOverflow("congruence lattice exceeded cap of " + std::to_string(cap), cap);
        worklist.push_back(std::move(j));
      }
    }
  }
  CongruenceLattice lat;
  lat.universe_size = n;
  lat.members.assign(done.begin(), done.end());
  return lat;
}

namespace {

// Restricted growth strings enumerate all partitions of {0..n-1}.
void all_partitions_rec(int n, int i, std::vector<int>& rgs, int max_used,
                        std::vector<Partition>& out) {
  if (i == n) {
    std::vector<int> first(static_cast<std::size_t>(n), -1);
    std::vector<int> leaders(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
      const int c = rgs[static_cast<std::size_t>(e)];
      if (first[static_cast<std::size_t>(c)] < 0) first[static_cast<std::size_t>(c)] = e;
      leaders[static_cast<std::size_t>(e)] = first[static_cast<std::size_t>(c)];
    }
    out.emplace_back(std::move(leaders));
    return;
  }
  for (int c = 0; c <= max_used + 1; ++c) {
    rgs[static_cast<std::size_t>(i)] = c;
    all_partitions_rec(n, i + 1, rgs, std::max(max_used, c), out);
  }
}

}  // namespace

std::vector<Partition> all_congruences_bruteforce(const FiniteAlgebra& alg) {
  if (alg.size() > 6)
    throw ParamError("brute-force congruence oracle limited to size <= 6, got " +
                     std::to_string(alg.size()));
  std::vector<Partition> all;
  std::vector<int> rgs(static_cast<std::size_t>(alg.size()), 0);
  if (alg.size() > 0) {
    rgs[0] = 0;
    all_partitions_rec(alg.size(), 1, rgs, 0, all);
  }
  std::vector<Partition> congruences;
  for (const Partition& p : all)
    if (is_congruence(alg, p)) congruences.push_back(p);
  std::sort(congruences.begin(), congruences.end());
  return congruences;
}

std::optional<PermutabilityWitness> check_permutable(const CongruenceLattice& lat) {
  const int n = lat.universe_size;
  for (std::size_t i = 0; i < lat.members.size(); ++i) {
    for (std::size_t j = i + 1; j < lat.members.size(); ++j) {
      const Partition& alpha = lat.members[i];
      const Partition& beta = lat.members[j];
      const std::vector<bool> ab = compose(alpha, beta);
      const std::vector<bool> ba = compose(beta, alpha);
      if (ab == ba) continue;
      for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
          const std::size_t at =
              static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(z);
          if (ab[at] && !ba[at]) return PermutabilityWitness{alpha, beta, x, z};
          if (ba[at] && !ab[at]) return PermutabilityWitness{beta, alpha, x, z};
        }
    }
  }
  return std::nullopt;
}

std::optional<LatticeLawWitness> check_modular(const CongruenceLattice& lat) {
  for (const Partition& alpha : lat.members)
    for (const Partition& beta : lat.members)
      for (const Partition& gamma : lat.members) {
        if (!gamma.refines(alpha)) continue;
        if (alpha.meet(beta.join(gamma)) != alpha.meet(beta).join(gamma))
          return LatticeLawWitness{alpha, beta, gamma};
      }
  return std::nullopt;
}

std::optional<LatticeLawWitness> check_distributive(const CongruenceLattice& lat) {
  for (const Partition& alpha : lat.members)
    for (const Partition& beta : lat.members)
      for (const Partition& gamma : lat.members) {
        if (alpha.meet(beta.join(gamma)) != alpha.meet(beta).join(alpha.meet(gamma)))
          return LatticeLawWitness{alpha, beta, gamma};
      }
  return std::nullopt;
}

}  // namespace majterm
