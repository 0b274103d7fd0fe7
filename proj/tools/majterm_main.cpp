// Command-line front end: find / verify / derive / con / gallery.
// Reports are line-oriented `key: value` pairs so scripts can grep them.
// Exit codes: 0 affirmative, 1 definite negative, 2 usage/parse/resource error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "majterm/algebra_io.hpp"
#include "majterm/checks.hpp"
#include "majterm/congruence.hpp"
#include "majterm/constructions.hpp"
#include "majterm/errors.hpp"
#include "majterm/gallery.hpp"
#include "majterm/subpower.hpp"
#include "majterm/term.hpp"

namespace {

using namespace majterm;

FiniteAlgebra load_source(const std::string& source) {
  constexpr std::string_view prefix = "gallery:";
  if (source.rfind(prefix, 0) == 0) return make_gallery_algebra(source.substr(prefix.size()));
  return load_algebra_file(source);
}

std::string pattern_string(const std::vector<int>& pattern) {
  std::string out = "{";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pattern[i]);
  }
  return out + "}";
}

std::string pair_string(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string assignment_string(const Assignment& sigma) {
  std::string out = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sigma[i]);
  }
  return out + ")";
}

void print_majority_counterexample(const MajorityCounterexample& ce) {
  std::cout << "pattern: " << pattern_string(ce.pattern) << "\n"
            << "pair: " << pair_string(ce.a, ce.b) << "\n"
            << "got: " << ce.got << "\n"
            << "want: " << ce.want << "\n";
}

int cmd_find(const std::string& source, int n, int m, bool witness, std::size_t cap) {
  const FiniteAlgebra alg = load_source(source);
  std::cout << "algebra: " << alg.name() << "\n"
            << "n: " << n << "\n"
            << "m: " << m << "\n";
  const FindResult res = find_exact_majority_term(alg, n, m, cap);
  switch (res.status) {
    case FindResult::Status::found: {
      std::cout << "result: FOUND\n"
                << "coordinates: " << res.coordinate_count << "\n"
                << "closure-size: " << res.closure_size << "\n";
      if (witness) {
        std::cout << "witness: " << format_term(res.witness) << "\n";
        const MajorityVerdict v = check_exact_majority(alg, *res.witness, n, m);
        std::cout << "recheck: " << (v.passed() ? "pass" : "fail") << "\n";
        if (!v.passed()) return 2;  // internal soundness failure, never expected
      }
      return 0;
    }
    case FindResult::Status::not_found:
      std::cout << "result: NOT-FOUND\n"
                << "coordinates: " << res.coordinate_count << "\n"
                << "closure-size: " << res.closure_size << "\n";
      return 1;
    case FindResult::Status::trivial_only:
      std::cout << "result: TRIVIAL-ONLY\n"
                << "conflict-pattern-a: " << pattern_string(res.conflict->first.pattern) << "\n"
                << "conflict-pair-a: " << pair_string(res.conflict->first.a, res.conflict->first.b)
                << "\n"
                << "conflict-pattern-b: " << pattern_string(res.conflict->second.pattern) << "\n"
                << "conflict-pair-b: " << pair_string(res.conflict->second.a, res.conflict->second.b)
                << "\n";
      return 1;
    case FindResult::Status::overflow:
      std::cout << "result: OVERFLOW\n"
                << "cap: " << cap << "\n";
      return 2;
  }
  return 2;
}

int cmd_verify(const std::string& source, const std::string& term_text, int n, int m,
               bool nonexact) {
  const FiniteAlgebra alg = load_source(source);
  const TermPtr u = parse_term(term_text);
  std::cout << "algebra: " << alg.name() << "\n"
            << "term: " << format_term(u) << "\n"
            << "check: " << (nonexact ? "majority(" : "exact(") << n << "," << m << ")\n";
  const MajorityVerdict v =
      nonexact ? check_m_majority(alg, *u, n, m) : check_exact_majority(alg, *u, n, m);
  if (v.passed()) {
    std::cout << "verdict: pass\n";
    return 0;
  }
  std::cout << "verdict: fail\n";
  print_majority_counterexample(*v.counterexample);
  return 1;
}

int cmd_derive(const std::string& source, const std::string& term_text, int n, int m,
               const std::string& rule) {
  const FiniteAlgebra alg = load_source(source);
  const TermPtr u = parse_term(term_text);

  std::string rule_name = rule;
  int collapse_k = 0;
  if (const auto eq = rule.find('='); eq != std::string::npos) {
    rule_name = rule.substr(0, eq);
    collapse_k = std::stoi(rule.substr(eq + 1));
  }
  if (rule_name != "maltsev" && rule_name != "collapse" && rule_name != "nu" &&
      rule_name != "nu-nonexact" && rule_name != "gumm")
    throw ParamError("unknown rule '" + rule + "' (maltsev|collapse=<k>|nu|nu-nonexact|gumm)");
  if (rule_name == "collapse" && collapse_k < 1)
    throw ParamError("rule collapse needs a positive factor, e.g. --rule collapse=2");

  std::cout << "algebra: " << alg.name() << "\n"
            << "rule: " << rule_name << "\n"
            << "n: " << n << "\n"
            << "m: " << m << "\n";
  if (rule_name == "collapse") std::cout << "k: " << collapse_k << "\n";

  // The input term must have the property the rule consumes.
  const MajorityVerdict input = rule_name == "nu-nonexact" ? check_m_majority(alg, *u, n, m)
                                                           : check_exact_majority(alg, *u, n, m);
  if (!input.passed()) {
    std::cout << "input-check: fail\n";
    print_majority_counterexample(*input.counterexample);
    return 1;
  }
  std::cout << "input-check: pass\n";

  const auto report_exact = [&](const TermPtr& t, int tn, int tm) {
    std::cout << "term: " << format_term(t) << "\n";
    const MajorityVerdict v = check_exact_majority(alg, *t, tn, tm);
    std::cout << "exact(" << tn << "," << tm << "): " << (v.passed() ? "pass" : "fail") << "\n";
    if (!v.passed()) {
      print_majority_counterexample(*v.counterexample);
      return 1;
    }
    return 0;
  };

  if (rule_name == "maltsev") {
    const TermPtr t = derive_maltsev(u, n, m);
    std::cout << "term: " << format_term(t) << "\n";
    const TermPtr x = Term::var(1);
    const TermPtr z = Term::var(2);
    const auto first = check_identity(alg, *substitute(t, {x, z, z}), *x, 2);
    const auto second = check_identity(alg, *substitute(t, {x, x, z}), *z, 2);
    const bool ok = !first && !second;
    std::cout << "maltsev: " << (ok ? "pass" : "fail") << "\n";
    if (first) std::cout << "identity: t(x,z,z) = x\nassignment: " << assignment_string(*first) << "\n";
    else if (second)
      std::cout << "identity: t(x,x,z) = z\nassignment: " << assignment_string(*second) << "\n";
    return ok ? 0 : 1;
  }
  if (rule_name == "collapse")
    return report_exact(derive_collapse(u, n, m, collapse_k), n / collapse_k, m / collapse_k);
  if (rule_name == "nu") {
    const int k = n - m;
    return report_exact(derive_near_unanimity(u, n, m), n / k, n / k - 1);
  }
  if (rule_name == "nu-nonexact")
    return report_exact(derive_nu_from_nonexact(u, n, m), m + 1, m);

  // gumm
  const GummSystem g = derive_gumm(u, n, m);
  std::cout << "parameters: k=" << g.k << " h=" << g.h << " l=" << g.ell << "\n";
  for (std::size_t i = 0; i < g.d.size(); ++i)
    std::cout << "d" << (i + 1) << ": " << format_term(g.d[i]) << "\n";
  std::cout << "q: " << format_term(g.q) << "\n";
  if (const auto bad = check_gumm_identities(alg, g)) {
    std::cout << "gumm-identities: fail\n"
              << "identity: " << bad->identity << "\n"
              << "assignment: " << assignment_string(bad->assignment) << "\n"
              << "lhs: " << bad->lhs << "\n"
              << "rhs: " << bad->rhs << "\n";
    return 1;
  }
  std::cout << "gumm-identities: pass\n";
  return 0;
}

int cmd_con(const std::string& source, const std::string& check, bool no_oracle, std::size_t cap) {
  if (check != "perm" && check != "mod" && check != "dist" && check != "all")
    throw ParamError("unknown property '" + check + "' (perm|mod|dist|all)");
  const FiniteAlgebra alg = load_source(source);
  std::cout << "algebra: " << alg.name() << "\n";
  const CongruenceLattice lat = congruence_lattice(alg, cap);
  std::cout << "con-size: " << lat.members.size() << "\n";

  if (!no_oracle) {
    if (alg.size() > 6)
      throw ParamError("universe size " + std::to_string(alg.size()) +
                       " exceeds the brute-force oracle bound of 6; pass --no-oracle");
    if (all_congruences_bruteforce(alg) != lat.members)
      throw Error("congruence lattice disagrees with the brute-force oracle");
    std::cout << "oracle: pass\n";
  }

  bool all_pass = true;
  if (check == "perm" || check == "all") {
    if (const auto w = check_permutable(lat)) {
      all_pass = false;
      std::cout << "permutable: FAIL\n"
                << "permutable-alpha: " << w->alpha.to_string() << "\n"
                << "permutable-beta: " << w->beta.to_string() << "\n"
                << "permutable-pair: " << pair_string(w->x, w->z) << "\n";
    } else {
      std::cout << "permutable: pass\n";
    }
  }
  if (check == "mod" || check == "all") {
    if (const auto w = check_modular(lat)) {
      all_pass = false;
      std::cout << "modular: FAIL\n"
                << "modular-alpha: " << w->alpha.to_string() << "\n"
                << "modular-beta: " << w->beta.to_string() << "\n"
                << "modular-gamma: " << w->gamma.to_string() << "\n";
    } else {
      std::cout << "modular: pass\n";
    }
  }
  if (check == "dist" || check == "all") {
    if (const auto w = check_distributive(lat)) {
      all_pass = false;
      std::cout << "distributive: FAIL\n"
                << "distributive-alpha: " << w->alpha.to_string() << "\n"
                << "distributive-beta: " << w->beta.to_string() << "\n"
                << "distributive-gamma: " << w->gamma.to_string() << "\n";
    } else {
      std::cout << "distributive: pass\n";
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_gallery(const std::string& name) {
  std::cout << gallery_file(name);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majterm: majority terms and congruence properties of finite algebras"};
  app.require_subcommand(1);

  std::string source, term_text, rule, check = "all", gallery_name;
  int n = 0, m = 0;
  bool witness = false, nonexact = false, no_oracle = false;
  std::size_t cap = majterm::kDefaultClosureCap;

  CLI::App* find = app.add_subcommand("find", "decide existence of an exact-m-majority term");
  find->add_option("source", source, "algebra file, or gallery:<name>")->required();
  find->add_option("-n,--n", n, "arity")->required();
  find->add_option("-m,--m", m, "exact multiplicity")->required();
  find->add_flag("--witness", witness, "print the witness term and re-check it");
  find->add_option("--max-closure", cap, "closure cap in tuples");

  CLI::App* verify = app.add_subcommand("verify", "check a term against the majority condition");
  verify->add_option("source", source, "algebra file, or gallery:<name>")->required();
  verify->add_option("--term", term_text, "term as an s-expression")->required();
  verify->add_option("-n,--n", n, "arity")->required();
  verify->add_option("-m,--m", m, "multiplicity")->required();
  verify->add_flag("--nonexact", nonexact, "check the at-least-m variant");

  CLI::App* derive = app.add_subcommand("derive", "derive terms and verify their identity suite");
  derive->add_option("source", source, "algebra file, or gallery:<name>")->required();
  derive->add_option("--term", term_text, "input term as an s-expression")->required();
  derive->add_option("-n,--n", n, "arity of the input term")->required();
  derive->add_option("-m,--m", m, "exact multiplicity of the input term")->required();
  derive->add_option("--rule", rule, "maltsev | collapse=<k> | nu | nu-nonexact | gumm")->required();

  CLI::App* con = app.add_subcommand("con", "congruence lattice and its properties");
  con->add_option("source", source, "algebra file, or gallery:<name>")->required();
  con->add_option("--check", check, "perm | mod | dist | all (default all)");
  con->add_flag("--no-oracle", no_oracle, "skip the brute-force cross-check");
  con->add_option("--max-closure", cap, "congruence lattice cap");

  CLI::App* gallery = app.add_subcommand("gallery", "emit a built-in algebra as a file");
  gallery->add_option("name", gallery_name, "gallery spec, e.g. z_mod:2 or chain:3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (find->parsed()) return cmd_find(source, n, m, witness, cap);
    if (verify->parsed()) return cmd_verify(source, term_text, n, m, nonexact);
    if (derive->parsed()) return cmd_derive(source, term_text, n, m, rule);
    if (con->parsed()) return cmd_con(source, check, no_oracle, cap);
    if (gallery->parsed()) return cmd_gallery(gallery_name);
  } catch (const majterm::ClosureOverflow& e) {
    std::cout << "result: OVERFLOW\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const majterm::ParseError& e) {
    std::cerr << "error: " << e.what() << " (at " << e.position << ")\n";
    return 2;
  } catch (const majterm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
