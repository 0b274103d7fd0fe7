#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "majterm/algebra.hpp"
#include "majterm/term.hpp"

namespace majterm {

// Element of a finite power A^K: one universe element per coordinate.
using PowerTuple = std::vector<std::uint8_t>;

struct PowerTupleHash {
  std::size_t operator()(const PowerTuple& t) const {
    if (t.empty()) return 0;
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(t.data()), t.size()));
  }
};

// How each element of a generated subpower came to be: either the j-th
// generator (1-based) or a basic operation applied to earlier elements.
// Parent indices are always strictly smaller than the node's own index, so a
// single bottom-up pass can replay or unfold any derivation.
struct DerivationDag {
  struct Node {
    int op = -1;         // index into op_names; -1 for a generator
    int generator = 0;   // 1-based generator position; 0 for derived nodes
    std::vector<std::uint32_t> parents;
  };
  std::vector<Node> nodes;
  std::vector<std::string> op_names;  // signature snapshot
};

// Closed set plus its derivation history. `elements` is in deterministic
// BFS discovery order: generators, then constants, then layer by layer.
struct Subpower {
  std::vector<PowerTuple> elements;
  DerivationDag dag;
  std::unordered_map<PowerTuple, std::uint32_t, PowerTupleHash> index;

  std::optional<std::uint32_t> find(const PowerTuple& t) const {
    auto it = index.find(t);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

inline constexpr std::size_t kDefaultClosureCap = 5'000'000;

// Smallest subset of A^K containing the generators and closed under every
// basic operation applied coordinatewise. Throws ClosureOverflow when the set
// would exceed `cap` tuples, and ParamError on generator length mismatch.
Subpower generate_subpower(const FiniteAlgebra& alg, const std::vector<PowerTuple>& generators,
                           std::size_t cap);

// Same closure but stops as soon as `target` appears; second component is the
// target's index when it was reached (the closure is then partial).
std::pair<Subpower, std::optional<std::uint32_t>> generate_subpower_until(
    const FiniteAlgebra& alg, const std::vector<PowerTuple>& generators, std::size_t cap,
    const PowerTuple& target);

// Unfolds the derivation of `target` into a term: generator j becomes x_j, a
// derived node becomes an application of its operation to the unfolded
// parents. Coordinatewise evaluation of the result on the generators yields
// `target` back. Throws ParamError when target is not in the closed set.
TermPtr extract_witness(const Subpower& sp, const PowerTuple& target);

// One coordinate of the majority equation system: positions in `pattern` take
// the value a, all others take b, and the target value is a.
struct Coordinate {
  std::vector<int> pattern;  // ascending, 1-based
  int a = 0, b = 0;
};

// The full system of majority instances for (n, m) over a given universe
// size, one coordinate per (pattern, a, b). With dedup enabled, coordinates
// whose generator columns and target entries agree are merged (those induce
// identical behaviour everywhere, so results cannot change).
struct CoordinateSet {
  int n = 0, m = 0, size = 0;
  std::vector<Coordinate> coords;

  static CoordinateSet build(int n, int m, int size, bool dedup);

  std::vector<PowerTuple> generators() const;  // n tuples, one per variable
  PowerTuple target() const;                   // the all-a tuple
};

// Certificate that the exact-(n/2)-majority demands clash: the two coordinates
// put identical arguments into u but require different outputs.
struct TrivialConflict {
  Coordinate first, second;
};

struct FindResult {
  enum class Status { found, not_found, trivial_only, overflow };
  Status status = Status::not_found;
  TermPtr witness;                         // found only
  std::optional<TrivialConflict> conflict; // trivial_only only
  std::size_t closure_size = 0;            // tuples generated (0 when no closure ran)
  std::size_t coordinate_count = 0;
};

// Decides whether alg has an n-ary exact-m-majority term by closing the
// generators in A^K and testing membership of the target, with early exit as
// soon as the target appears. When n is even, m = n/2 and |A| >= 2, returns
// trivial_only with a conflict certificate before any closure work.
FindResult find_exact_majority_term(const FiniteAlgebra& alg, int n, int m,
                                    std::size_t cap = kDefaultClosureCap,
                                    bool dedup_coordinates = true);

// All arity-ary term operations of alg as tables (lexicographically sorted):
// the closure of the projections in A^(A^arity). Brute-force oracle, only
// sensible at tiny scale.
std::vector<PowerTuple> enumerate_term_operations(const FiniteAlgebra& alg, int arity,
                                                  std::size_t cap);

}  // namespace majterm
