#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace majterm {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term tree over some signature. Variables are 1-indexed
// (x1, x2, ...). Nodes are shared freely, so a "tree" is really a DAG;
// everything downstream (evaluation, substitution, formatting) respects the
// sharing where it matters for cost.
class Term {
 public:
  static TermPtr var(int index);
  static TermPtr app(std::string op_name, std::vector<TermPtr> children);

  bool is_var() const { return var_index_ > 0; }
  int var_index() const { return var_index_; }
  const std::string& op_name() const { return op_name_; }
  const std::vector<TermPtr>& children() const { return children_; }

  // Largest variable index occurring in the term, 0 if none.
  int max_var_index() const { return max_var_index_; }

 private:
  Term() = default;
  int var_index_ = 0;
  std::string op_name_;
  std::vector<TermPtr> children_;
  int max_var_index_ = 0;
};

bool term_equal(const Term& a, const Term& b);
inline bool term_equal(const TermPtr& a, const TermPtr& b) { return term_equal(*a, *b); }

// S-expression rendering: variables as `x<i>`, applications as
// `(<op> t1 ... tk)`; a constant prints as `(<op>)`.
std::string format_term(const Term& t);
inline std::string format_term(const TermPtr& t) { return format_term(*t); }

// Parses the syntax produced by format_term. Operation symbols are words over
// letters, '_', '+', '*', '-' and non-ASCII characters; digits are reserved
// for variables. Whitespace-insensitive. parse_term(format_term(t)) == t.
// Unknown operation symbols are accepted here and reported at evaluation.
// Throws ParseError with a byte offset.
TermPtr parse_term(std::string_view text);

// Replaces x_i by args[i-1] everywhere. Shared subterms are rewritten once.
// Throws ParamError when the term uses a variable beyond args.size().
TermPtr substitute(const TermPtr& t, const std::vector<TermPtr>& args);

}  // namespace majterm
