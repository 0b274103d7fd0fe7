#include "majterm/gallery.hpp"

#include <array>
#include <charconv>
#include <numeric>

#include "majterm/algebra_io.hpp"
#include "majterm/checks.hpp"
#include "majterm/constructions.hpp"
#include "majterm/errors.hpp"

namespace majterm {

namespace {

std::vector<std::string> split_colon(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(':', start);
    if (at == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, at - start));
    start = at + 1;
  }
}

int int_param(const std::string& text, const std::string& what) {
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    throw ParamError("gallery: expected an integer for " + what + ", got '" + text + "'");
  return v;
}

Operation binary_table(std::string name, int size, int (*f)(int, int, int)) {
  Operation op{std::move(name), 2, std::vector<int>()};
  op.table.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) op.table.push_back(f(a, b, size));
  return op;
}

FiniteAlgebra make_cyclic_group(int q) {
  if (q < 1) throw ParamError("gallery: z_mod needs a positive modulus");
  Operation plus = binary_table("+", q, [](int a, int b, int s) { return (a + b) % s; });
  Operation neg{"-", 1, std::vector<int>()};
  for (int a = 0; a < q; ++a) neg.table.push_back((q - a) % q);
  Operation zero{"zero", 0, {0}};
  return FiniteAlgebra("z_mod:" + std::to_string(q), q, {plus, neg, zero});
}

FiniteAlgebra make_klein() {
  Operation plus = binary_table("+", 4, [](int a, int b, int) { return a ^ b; });
  Operation neg{"-", 1, {0, 1, 2, 3}};  // exponent two: every element is its own inverse
  Operation zero{"zero", 0, {0}};
  return FiniteAlgebra("klein", 4, {plus, neg, zero});
}

FiniteAlgebra make_sym3() {
  // Elements are the permutations of {0,1,2} in lexicographic order.
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[static_cast<std::size_t>(i)] == p) return i;
    throw Error("sym:3 table construction failed");
  };
  Operation mul{"*", 2, std::vector<int>()};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x)
        comp[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
      mul.table.push_back(index_of(comp));
    }
  Operation inv{"inv", 1, std::vector<int>()};
  for (int i = 0; i < 6; ++i) {
    std::array<int, 3> p{};
    for (int x = 0; x < 3; ++x)
      p[static_cast<std::size_t>(perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)])] = x;
    inv.table.push_back(index_of(p));
  }
  Operation e{"e", 0, {0}};
  return FiniteAlgebra("sym:3", 6, {mul, inv, e});
}

FiniteAlgebra make_chain(int n) {
  if (n < 1) throw ParamError("gallery: chain needs at least one element");
  Operation meet = binary_table("meet", n, [](int a, int b, int) { return a < b ? a : b; });
  Operation join = binary_table("join", n, [](int a, int b, int) { return a > b ? a : b; });
  return FiniteAlgebra("chain:" + std::to_string(n), n, {meet, join});
}

// Lattice tables from a reflexive-transitive order matrix.
FiniteAlgebra lattice_from_order(std::string name, int n, const std::vector<std::pair<int, int>>& below) {
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  for (auto [lo, hi] : below) leq[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

  const auto bound = [&](int a, int b, bool lower) {
    int best = -1;
    for (int c = 0; c < n; ++c) {
      const bool cmp = lower
                           ? leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] &&
                                 leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]
                           : leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                                 leq[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
      if (!cmp) continue;
      if (best < 0) {
        best = c;
      } else {
        const bool improves = lower ? leq[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)]
                                    : leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(best)];
        if (improves) best = c;
      }
    }
    if (best < 0) throw Error("order is not a lattice");
    // best must compare with every candidate, otherwise the bound is not unique
    for (int c = 0; c < n; ++c) {
      const bool cmp = lower
                           ? leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] &&
                                 leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]
                           : leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                                 leq[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
      const bool ok = lower ? leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(best)]
                            : leq[static_cast<std::size_t>(best)][static_cast<std::size_t>(c)];
      if (cmp && !ok) throw Error("order is not a lattice");
    }
    return best;
  };

  Operation meet{"meet", 2, std::vector<int>()};
  Operation join{"join", 2, std::vector<int>()};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet.table.push_back(bound(a, b, true));
      join.table.push_back(bound(a, b, false));
    }
  return FiniteAlgebra(std::move(name), n, {meet, join});
}

FiniteAlgebra make_n5() {
  // 0 bottom, 4 top, 0 < 1 < 3 < 4 and 0 < 2 < 4; 2 incomparable to 1 and 3.
  return lattice_from_order("n5", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteAlgebra make_m3() {
  // 0 bottom, 4 top, atoms 1, 2, 3.
  return lattice_from_order("m3", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteAlgebra make_bare(int n) {
  if (n < 1) throw ParamError("gallery: bare needs at least one element");
  return FiniteAlgebra("bare:" + std::to_string(n), n, {});
}

FiniteAlgebra make_example4b(int size, int n, int m, int anchor) {
  Operation op = build_generic_majority_operation(size, n, m, anchor);
  const std::string name = "example4b:" + std::to_string(size) + ":" + std::to_string(n) + ":" +
                           std::to_string(m) + ":" + std::to_string(anchor);
  return FiniteAlgebra(name, size, {std::move(op)});
}

// Reducts carrying a single 5-ary operation: the product-of-sums majority
// term evaluated in a chain, or the five-fold group sum in the four-group.
FiniteAlgebra make_v35_lattice_reduct(std::string name, int chain_size) {
  const FiniteAlgebra chain = make_chain(chain_size);
  const TermPtr u = build_lattice_majority_term(5, 3);
  Operation op = tabulate_term(chain, *u, 5, "u");
  return FiniteAlgebra(std::move(name), chain_size, {std::move(op)});
}

FiniteAlgebra make_v35_group_reduct() {
  const FiniteAlgebra klein = make_klein();
  TermPtr sum = Term::var(1);
  for (int j = 2; j <= 5; ++j) sum = Term::app("+", {sum, Term::var(j)});
  Operation op = tabulate_term(klein, *sum, 5, "u");
  return FiniteAlgebra("v35_group_witness", 4, {std::move(op)});
}

}  // namespace

FiniteAlgebra make_gallery_algebra(std::string_view spec) {
  const std::vector<std::string> parts = split_colon(spec);
  const std::string& head = parts[0];
  const auto arity_is = [&](std::size_t want, const char* usage) {
    if (parts.size() != want) throw ParamError(std::string("gallery: usage ") + usage);
  };

  if (head == "z_mod") {
    arity_is(2, "z_mod:<q>");
    return make_cyclic_group(int_param(parts[1], "modulus"));
  }
  if (head == "klein") {
    arity_is(1, "klein");
    return make_klein();
  }
  if (head == "sym") {
    arity_is(2, "sym:3");
    if (int_param(parts[1], "degree") != 3) throw ParamError("gallery: only sym:3 is built in");
    return make_sym3();
  }
  if (head == "chain") {
    arity_is(2, "chain:<n>");
    return make_chain(int_param(parts[1], "chain length"));
  }
  if (head == "n5") {
    arity_is(1, "n5");
    return make_n5();
  }
  if (head == "m3") {
    arity_is(1, "m3");
    return make_m3();
  }
  if (head == "bare") {
    arity_is(2, "bare:<n>");
    return make_bare(int_param(parts[1], "size"));
  }
  if (head == "example4b") {
    arity_is(5, "example4b:<size>:<n>:<m>:<anchor>");
    return make_example4b(int_param(parts[1], "size"), int_param(parts[2], "n"),
                          int_param(parts[3], "m"), int_param(parts[4], "anchor"));
  }
  if (head == "v35_lattice_witness") {
    arity_is(1, "v35_lattice_witness");
    return make_v35_lattice_reduct("v35_lattice_witness", 2);
  }
  if (head == "v35_chain_witness") {
    arity_is(1, "v35_chain_witness");
    return make_v35_lattice_reduct("v35_chain_witness", 3);
  }
  if (head == "v35_group_witness") {
    arity_is(1, "v35_group_witness");
    return make_v35_group_reduct();
  }
  throw ParamError("gallery: unknown algebra '" + std::string(spec) + "'");
}

std::string gallery_file(std::string_view spec) {
  const FiniteAlgebra alg = make_gallery_algebra(spec);
  std::string out = "# built-in algebra " + alg.name() + "\n";
  if (alg.name() == "sym:3")
    out += "# elements are the permutations of {0,1,2} in lexicographic order\n";
  if (alg.name() == "n5")
    out += "# pentagon: 0 bottom, 4 top, 0 < 1 < 3 < 4, 0 < 2 < 4\n";
  if (alg.name() == "m3")
    out += "# diamond: 0 bottom, 4 top, atoms 1, 2, 3\n";
  out += save_algebra(alg);
  return out;
}

std::vector<std::string> gallery_catalog() {
  return {
      "z_mod:<q>",
      "klein",
      "sym:3",
      "chain:<n>",
      "n5",
      "m3",
      "bare:<n>",
      "example4b:<size>:<n>:<m>:<anchor>",
      "v35_lattice_witness",
      "v35_chain_witness",
      "v35_group_witness",
  };
}

}  // namespace majterm
