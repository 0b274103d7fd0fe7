#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "majterm/algebra.hpp"

namespace majterm {

// Equivalence relation on {0..n-1} in canonical block form: each element maps
// to the least element of its block. Canonical form is unique per relation,
// so equality and ordering are plain vector comparisons.
class Partition {
 public:
  // `leaders[e]` must already be the least element of e's block.
  explicit Partition(std::vector<int> leaders);

  static Partition identity(int n);      // bottom: all singletons
  static Partition single_block(int n);  // top
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(leaders_.size()); }
  int leader(int e) const { return leaders_[static_cast<std::size_t>(e)]; }
  bool same_block(int a, int b) const { return leader(a) == leader(b); }
  const std::vector<int>& leaders() const { return leaders_; }

  std::vector<std::vector<int>> blocks() const;  // sorted by least element
  int block_count() const;

  bool refines(const Partition& coarser) const;  // this <= coarser
  Partition meet(const Partition& other) const;  // intersection
  Partition join(const Partition& other) const;  // transitive closure of union

  std::string to_string() const;  // e.g. "{{0,1},{2}}"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.leaders_ <=> b.leaders_;
  }

 private:
  std::vector<int> leaders_;
};

// Is p compatible with every basic operation? Uses the one-coordinate
// characterisation: replacing a single argument by a related one must keep
// the results related (equivalent to full compatibility by transitivity).
bool is_congruence(const FiniteAlgebra& alg, const Partition& p);

// Least congruence collapsing (a, b): transitive closure of the subalgebra of
// A^2 generated by the diagonal together with (a,b) and (b,a).
Partition principal_congruence(const FiniteAlgebra& alg, int a, int b);

struct CongruenceLattice {
  int universe_size = 0;
  std::vector<Partition> members;  // sorted by canonical leader vector
  bool contains(const Partition& p) const;
};

// All congruences: the principal ones closed under binary join, plus the
// bottom. Every congruence is a join of principals, so this is complete.
// Throws ClosureOverflow when the lattice would exceed `cap` members.
CongruenceLattice congruence_lattice(const FiniteAlgebra& alg, std::size_t cap = 100'000);

// Ground truth by filtering all partitions of the universe; Bell(6) = 203 is
// the largest instance allowed (size <= 6).
std::vector<Partition> all_congruences_bruteforce(const FiniteAlgebra& alg);

// (x, z) lies in alpha o beta but not in beta o alpha.
struct PermutabilityWitness {
  Partition alpha, beta;
  int x = 0, z = 0;
};

// alpha o beta = beta o alpha for all pairs? nullopt on pass.
std::optional<PermutabilityWitness> check_permutable(const CongruenceLattice& lat);

// A triple violating the modular (resp. distributive) law.
struct LatticeLawWitness {
  Partition alpha, beta, gamma;
};

// Modular law: gamma <= alpha implies alpha /\ (beta \/ gamma) = (alpha /\ beta) \/ gamma.
std::optional<LatticeLawWitness> check_modular(const CongruenceLattice& lat);

// Distributive law: alpha /\ (beta \/ gamma) = (alpha /\ beta) \/ (alpha /\ gamma).
std::optional<LatticeLawWitness> check_distributive(const CongruenceLattice& lat);

}  // namespace majterm
