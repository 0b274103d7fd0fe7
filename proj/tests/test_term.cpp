#include <doctest.h>

#include <random>

#include "majterm/errors.hpp"
#include "majterm/term.hpp"
#include "test_util.hpp"

using namespace majterm;

TEST_SUITE("term") {
  TEST_CASE("parse builds the expected tree") {
    const TermPtr t = parse_term("(+ x1 (+ x2 x3))");
    REQUIRE_FALSE(t->is_var());
    CHECK(t->op_name() == "+");
    REQUIRE(t->children().size() == 2);
    CHECK(t->children()[0]->var_index() == 1);
    const TermPtr inner = t->children()[1];
    CHECK(inner->op_name() == "+");
    CHECK(inner->children()[0]->var_index() == 2);
    CHECK(inner->children()[1]->var_index() == 3);
    CHECK(t->max_var_index() == 3);
  }

  TEST_CASE("bare variable") {
    const TermPtr t = parse_term("x7");
    CHECK(t->is_var());
    CHECK(t->var_index() == 7);
  }

  TEST_CASE("whitespace is insignificant") {
    CHECK(term_equal(parse_term("(meet x1   (join\n x2\tx3))"),
                     parse_term("(meet x1 (join x2 x3))")));
  }

  TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_term("(meet x1"), ParseError);
    CHECK_THROWS_AS(parse_term(""), ParseError);
    CHECK_THROWS_AS(parse_term(")"), ParseError);
    CHECK_THROWS_AS(parse_term("(x1 x2)"), ParseError);   // variable in operator position
    CHECK_THROWS_AS(parse_term("meet"), ParseError);      // bare operator symbol
    CHECK_THROWS_AS(parse_term("x0"), ParseError);        // variables start at x1
    CHECK_THROWS_AS(parse_term("(f2 x1)"), ParseError);   // digits reserved for variables
    CHECK_THROWS_AS(parse_term("(+ x1 x2) x3"), ParseError);
    try {
      parse_term("(meet x1");
    } catch (const ParseError& e) {
      CHECK(e.position == 0);  // points at the unclosed '('
    }
  }

  TEST_CASE("constants format with parens") {
    const TermPtr t = Term::app("zero", {});
    CHECK(format_term(t) == "(zero)");
    CHECK(term_equal(parse_term("(zero)"), t));
  }

  TEST_CASE("round trip on random terms") {
    const FiniteAlgebra z3 = testutil::gal("z_mod:3");
    const FiniteAlgebra chain = testutil::gal("chain:3");
    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
      const TermPtr t = testutil::random_term(rng, i % 2 ? z3 : chain, 4, 4);
      CHECK(term_equal(parse_term(format_term(t)), t));
    }
  }

  TEST_CASE("substitute replaces variables and keeps structure") {
    const TermPtr u = parse_term("(+ x1 (+ x2 x2))");
    const TermPtr t = substitute(u, {Term::var(3), parse_term("(+ x1 x1)")});
    CHECK(format_term(t) == "(+ x3 (+ (+ x1 x1) (+ x1 x1)))");
    CHECK_THROWS_AS(substitute(u, {Term::var(1)}), ParamError);
  }
}
