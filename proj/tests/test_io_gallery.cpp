#include <doctest.h>

#include <sstream>

#include "majterm/algebra_io.hpp"
#include "majterm/checks.hpp"
#include "majterm/congruence.hpp"
#include "majterm/errors.hpp"
#include "majterm/gallery.hpp"
#include "test_util.hpp"

using namespace majterm;
using testutil::gal;

namespace {

FiniteAlgebra load_text(const std::string& text) {
  std::istringstream in(text);
  return load_algebra(in);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("load a small group file") {
    const FiniteAlgebra alg = load_text(
        "# two-element group\n"
        "algebra z2\n"
        "size 2\n"
        "op + 2\n"
        "0 1\n"
        "1 0\n");
    CHECK(alg.name() == "z2");
    CHECK(alg.size() == 2);
    REQUIRE(alg.operations().size() == 1);
    CHECK(alg.operations()[0].table == std::vector<int>{0, 1, 1, 0});
  }

  TEST_CASE("errors carry line numbers") {
    try {
      load_text("algebra bad\nsize 2\nop f 1\n0 2\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position == 4);  // the out-of-range entry sits on line 4
      CHECK(std::string(e.what()).find("outside universe") != std::string::npos);
    }

    CHECK_THROWS_AS(load_text("algebra x\nsize 2\nop f 2\n0 1 0\n"), ParseError);  // short table
    CHECK_THROWS_AS(load_text("size 2\n"), ParseError);
    CHECK_THROWS_AS(load_text("algebra x\nsize 0\n"), ParseError);
    CHECK_THROWS_AS(load_text("algebra x\nsize 2\nop f 1\n0 1\nop f 1\n0 1\n"), ParseError);
  }

  TEST_CASE("save is canonical and stable under reload") {
    for (const std::string spec :
         {"z_mod:3", "klein", "sym:3", "chain:3", "n5", "m3", "bare:4",
          "example4b:3:4:1:0", "v35_lattice_witness", "v35_chain_witness", "v35_group_witness"}) {
      const FiniteAlgebra alg = gal(spec);
      const std::string text = save_algebra(alg);
      std::istringstream in(text);
      const FiniteAlgebra back = load_algebra(in);
      CHECK(back.name() == alg.name());
      CHECK(back.size() == alg.size());
      CHECK(save_algebra(back) == text);
    }
  }

  TEST_CASE("comments and whitespace are normalized away") {
    const std::string noisy =
        "# noisy   file\nalgebra   z2   # name\nsize 2\nop + 2\n  0   1\n1 0 # row\n";
    const std::string canonical = "algebra z2\nsize 2\nop + 2\n0 1\n1 0\n";
    CHECK(save_algebra(load_text(noisy)) == canonical);
  }
}

TEST_SUITE("gallery") {
  TEST_CASE("cyclic groups satisfy the group identities") {
    for (int q : {2, 3, 4, 5}) {
      const FiniteAlgebra g = gal("z_mod:" + std::to_string(q));
      CHECK_FALSE(check_identity(g, *parse_term("(+ (+ x1 x2) x3)"),
                                 *parse_term("(+ x1 (+ x2 x3))"), 3));
      CHECK_FALSE(check_identity(g, *parse_term("(+ x1 (zero))"), *Term::var(1), 1));
      CHECK_FALSE(check_identity(g, *parse_term("(+ x1 (- x1))"), *parse_term("(zero)"), 1));
      CHECK_FALSE(check_identity(g, *parse_term("(+ x1 x2)"), *parse_term("(+ x2 x1)"), 2));
    }
  }

  TEST_CASE("sym:3 is a group and not abelian") {
    const FiniteAlgebra s3 = gal("sym:3");
    CHECK_FALSE(check_identity(s3, *parse_term("(* (* x1 x2) x3)"),
                               *parse_term("(* x1 (* x2 x3))"), 3));
    CHECK_FALSE(check_identity(s3, *parse_term("(* x1 (e))"), *Term::var(1), 1));
    CHECK_FALSE(check_identity(s3, *parse_term("(* (e) x1)"), *Term::var(1), 1));
    CHECK_FALSE(check_identity(s3, *parse_term("(* x1 (inv x1))"), *parse_term("(e)"), 1));
    CHECK(check_identity(s3, *parse_term("(* x1 x2)"), *parse_term("(* x2 x1)"), 2).has_value());
  }

  TEST_CASE("lattice fixtures satisfy the lattice identities") {
    for (const char* spec : {"chain:2", "chain:4", "n5", "m3"}) {
      const FiniteAlgebra lat = gal(spec);
      for (const char* op : {"meet", "join"}) {
        const std::string o(op);
        CHECK_FALSE(check_identity(lat, *parse_term("(" + o + " x1 x1)"), *Term::var(1), 1));
        CHECK_FALSE(check_identity(lat, *parse_term("(" + o + " x1 x2)"),
                                   *parse_term("(" + o + " x2 x1)"), 2));
        CHECK_FALSE(check_identity(lat, *parse_term("(" + o + " (" + o + " x1 x2) x3)"),
                                   *parse_term("(" + o + " x1 (" + o + " x2 x3))"), 3));
      }
      CHECK_FALSE(check_identity(lat, *parse_term("(meet x1 (join x1 x2))"), *Term::var(1), 2));
      CHECK_FALSE(check_identity(lat, *parse_term("(join x1 (meet x1 x2))"), *Term::var(1), 2));
    }
  }

  TEST_CASE("n5 is the pentagon, m3 the diamond") {
    const FiniteAlgebra n5 = gal("n5");
    CHECK(eval_term(n5, *parse_term("(meet x1 x2)"), {1, 2}) == 0);
    CHECK(eval_term(n5, *parse_term("(join x1 x2)"), {1, 2}) == 4);
    CHECK(eval_term(n5, *parse_term("(meet x1 x2)"), {1, 3}) == 1);

    const FiniteAlgebra m3 = gal("m3");
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        CHECK(eval_term(m3, *parse_term("(meet x1 x2)"), {i, j}) == 0);
        CHECK(eval_term(m3, *parse_term("(join x1 x2)"), {i, j}) == 4);
      }
  }

  TEST_CASE("the klein-based reduct carries the five-fold sum") {
    const FiniteAlgebra w = gal("v35_group_witness");
    REQUIRE(w.operations().size() == 1);
    CHECK(w.operations()[0].arity == 5);
    CHECK(check_exact_majority(w, *parse_term("(u x1 x2 x3 x4 x5)"), 5, 3).passed());
  }

  TEST_CASE("the chain reducts carry an exact-3-majority operation") {
    for (const char* spec : {"v35_lattice_witness", "v35_chain_witness"}) {
      const FiniteAlgebra w = gal(spec);
      REQUIRE(w.operations().size() == 1);
      CHECK(check_m_majority(w, *parse_term("(u x1 x2 x3 x4 x5)"), 5, 3).passed());
    }
  }

  TEST_CASE("bad gallery names are rejected") {
    CHECK_THROWS_AS(gal("nope"), ParamError);
    CHECK_THROWS_AS(gal("z_mod:x"), ParamError);
    CHECK_THROWS_AS(gal("example4b:2:4:2:0"), ParamError);  // m = n/2
    CHECK_THROWS_AS(gal("sym:4"), ParamError);
  }

  TEST_CASE("gallery bytes are deterministic") {
    CHECK(gallery_file("z_mod:2") == gallery_file("z_mod:2"));
    const std::string z3 = gallery_file("z_mod:3");
    CHECK(z3.find("algebra z_mod:3\nsize 3\nop + 2\n0 1 2\n1 2 0\n2 0 1\n") != std::string::npos);
  }
}
