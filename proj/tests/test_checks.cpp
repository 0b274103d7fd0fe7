#include <doctest.h>

#include <algorithm>
#include <random>

#include "majterm/checks.hpp"
#include "majterm/constructions.hpp"
#include "majterm/errors.hpp"
#include "test_util.hpp"

using namespace majterm;
using testutil::gal;
using testutil::sum_term;

namespace {

// Rebuilds the assignment a counterexample describes.
Assignment assignment_of(const MajorityCounterexample& ce, int n) {
  Assignment sigma(static_cast<std::size_t>(n), ce.b);
  for (int p : ce.pattern) sigma[static_cast<std::size_t>(p) - 1] = ce.a;
  return sigma;
}

}  // namespace

TEST_SUITE("checks") {
  TEST_CASE("eval_term on small fixtures") {
    const FiniteAlgebra z2 = gal("z_mod:2");
    CHECK(eval_term(z2, *parse_term("(+ (+ x1 x2) x3)"), {1, 1, 1}) == 1);

    const FiniteAlgebra chain2 = gal("chain:2");
    CHECK(eval_term(chain2, *parse_term("(meet x1 (join x2 x3))"), {1, 0, 1}) == 1);

    CHECK(eval_term(chain2, *Term::var(2), {0, 1, 0}) == 1);  // projection
    CHECK(eval_term(z2, *parse_term("(zero)"), {}) == 0);
  }

  TEST_CASE("eval_term error reporting") {
    const FiniteAlgebra z2 = gal("z_mod:2");
    CHECK_THROWS_AS(eval_term(z2, *parse_term("(meet x1 x2)"), {0, 1}), EvalError);
    CHECK_THROWS_AS(eval_term(z2, *parse_term("(+ x1 x2 x3)"), {0, 1, 1}), EvalError);
    CHECK_THROWS_AS(eval_term(z2, *parse_term("(+ x1 x4)"), {0, 1}), EvalError);
    CHECK_THROWS_AS(eval_term(z2, *parse_term("x1"), {7}), EvalError);
  }

  TEST_CASE("exact majority: five-fold sum over z2") {
    const FiniteAlgebra z2 = gal("z_mod:2");
    const TermPtr u = sum_term(5);
    CHECK(check_exact_majority(z2, *u, 5, 3).passed());

    // m = 2: the first pattern {1,2} with (a,b) = (0,1) puts three b's in;
    // their sum is 1 while a = 0 is required.
    const MajorityVerdict v = check_exact_majority(z2, *u, 5, 2);
    REQUIRE_FALSE(v.passed());
    const MajorityCounterexample& ce = *v.counterexample;
    CHECK(ce.pattern == std::vector<int>{1, 2});
    CHECK(ce.a == 0);
    CHECK(ce.b == 1);
    CHECK(ce.got == 1);
    CHECK(ce.want == 0);
    // the counterexample replays
    CHECK(eval_term(z2, *u, assignment_of(ce, 5)) == ce.got);
  }

  TEST_CASE("projection is an exact-1-majority term at arity 1") {
    const FiniteAlgebra chain3 = gal("chain:3");
    CHECK(check_exact_majority(chain3, *Term::var(1), 1, 1).passed());
  }

  TEST_CASE("parameter validation") {
    const FiniteAlgebra z2 = gal("z_mod:2");
    const TermPtr u = sum_term(5);
    CHECK_THROWS_AS(check_exact_majority(z2, *u, 5, 0), ParamError);
    CHECK_THROWS_AS(check_exact_majority(z2, *u, 5, 6), ParamError);
    CHECK_THROWS_AS(check_exact_majority(z2, *u, 4, 2), ParamError);  // u uses x5
    CHECK_THROWS_AS(check_m_majority(z2, *u, 5, 2), ParamError);      // needs m > n/2
  }

  TEST_CASE("non-exact majority: product of sums on the 2-chain") {
    const FiniteAlgebra chain2 = gal("chain:2");
    const TermPtr u35 = build_lattice_majority_term(5, 3);
    CHECK(check_m_majority(chain2, *u35, 5, 3).passed());

    // passing at-least-m implies passing exactly-m' for every m' >= m
    CHECK(check_exact_majority(chain2, *u35, 5, 3).passed());
    CHECK(check_exact_majority(chain2, *u35, 5, 4).passed());
    CHECK(check_exact_majority(chain2, *u35, 5, 5).passed());
  }

  TEST_CASE("non-exact majority failure: four-of-five sum over z2") {
    const FiniteAlgebra z2 = gal("z_mod:2");
    const MajorityVerdict v = check_m_majority(z2, *sum_term(5), 5, 4);
    REQUIRE_FALSE(v.passed());
    const MajorityCounterexample& ce = *v.counterexample;
    CHECK(ce.pattern == std::vector<int>{1, 2, 3, 4});
    CHECK(ce.a == 0);
    CHECK(ce.b == 1);
    CHECK(ce.got == 1);
    CHECK(eval_term(z2, *sum_term(5), assignment_of(ce, 5)) == ce.got);
  }

  TEST_CASE("check_identity") {
    const FiniteAlgebra z3 = gal("z_mod:3");
    const TermPtr t = parse_term("(+ x1 (+ x2 (+ x2 x3)))");  // x + 2y + z
    CHECK_FALSE(check_identity(z3, *substitute(t, {Term::var(1), Term::var(1), Term::var(3)}),
                               *Term::var(3), 3));

    const FiniteAlgebra z2 = gal("z_mod:2");
    const auto ce = check_identity(z2, *parse_term("(+ x1 x2)"), *Term::var(1), 2);
    REQUIRE(ce.has_value());
    CHECK(*ce == Assignment{0, 1});

    const FiniteAlgebra chain2 = gal("chain:2");
    CHECK_FALSE(check_identity(chain2, *parse_term("(meet x1 x2)"), *parse_term("(meet x2 x1)"), 2));
  }

  TEST_CASE("idempotence is the same as exact-n-majority") {
    const std::vector<std::pair<const char*, TermPtr>> cases = {
        {"z_mod:2", sum_term(3)},
        {"z_mod:3", sum_term(3)},
        {"chain:2", parse_term("(join x1 (meet x2 x3))")},
        {"z_mod:3", parse_term("(+ x1 (+ x2 (zero)))")},
    };
    for (const auto& [spec, u] : cases) {
      const FiniteAlgebra alg = gal(spec);
      const int n = u->max_var_index();
      const bool exact_nn = check_exact_majority(alg, *u, n, n).passed();
      const bool idem = !check_identity(
          alg, *substitute(u, std::vector<TermPtr>(static_cast<std::size_t>(n), Term::var(1))),
          *Term::var(1), 1);
      CHECK(exact_nn == idem);
    }
    CHECK(check_exact_majority(gal("z_mod:2"), *sum_term(3), 3, 3).passed());
    CHECK_FALSE(check_exact_majority(gal("z_mod:3"), *sum_term(3), 3, 3).passed());
  }

  TEST_CASE("m = n/2 fails for every term on a nontrivial algebra") {
    std::mt19937 rng(777);
    for (const char* spec : {"z_mod:2", "z_mod:3", "chain:2"}) {
      const FiniteAlgebra alg = gal(spec);
      for (int i = 0; i < 25; ++i) {
        const TermPtr t = testutil::random_term(rng, alg, 4, 3);
        CHECK_FALSE(check_exact_majority(alg, *t, 4, 2).passed());
      }
    }
  }

  TEST_CASE("random re-sampling agrees with a pass verdict") {
    const FiniteAlgebra z2 = gal("z_mod:2");
    const TermPtr u = sum_term(5);
    REQUIRE(check_exact_majority(z2, *u, 5, 3).passed());
    std::mt19937 rng(123);
    for (int i = 0; i < 100; ++i) {
      std::vector<int> positions{1, 2, 3, 4, 5};
      std::shuffle(positions.begin(), positions.end(), rng);
      const int a = std::uniform_int_distribution<int>(0, 1)(rng);
      const int b = std::uniform_int_distribution<int>(0, 1)(rng);
      Assignment sigma(5, b);
      for (int j = 0; j < 3; ++j) sigma[static_cast<std::size_t>(positions[j]) - 1] = a;
      if (a != b) CHECK(eval_term(z2, *u, sigma) == a);
    }
  }

  TEST_CASE("verdicts are deterministic") {
    const FiniteAlgebra z2 = gal("z_mod:2");
    const TermPtr u = sum_term(5);
    const MajorityVerdict v1 = check_exact_majority(z2, *u, 5, 2);
    const MajorityVerdict v2 = check_exact_majority(z2, *u, 5, 2);
    REQUIRE_FALSE(v1.passed());
    CHECK(v1.counterexample->pattern == v2.counterexample->pattern);
    CHECK(v1.counterexample->a == v2.counterexample->a);
    CHECK(v1.counterexample->b == v2.counterexample->b);
    CHECK(v1.counterexample->got == v2.counterexample->got);
  }

  TEST_CASE("tabulate_term round") {
    const FiniteAlgebra z3 = gal("z_mod:3");
    const Operation op = tabulate_term(z3, *parse_term("(+ x1 (+ x2 x3))"), 3, "s");
    CHECK(op.arity == 3);
    CHECK(op.table.size() == 27);
    CHECK(op.table[0 * 9 + 1 * 3 + 2] == 0);  // 0+1+2
    CHECK(op.table[2 * 9 + 2 * 3 + 2] == 0);  // 2+2+2
    CHECK(op.table[1 * 9 + 0 * 3 + 0] == 1);
  }
}
