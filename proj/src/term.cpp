#include "majterm/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

#include "majterm/errors.hpp"

namespace majterm {

TermPtr Term::var(int index) {
  if (index < 1) throw ParamError("variable index must be at least 1, got " + std::to_string(index));
  auto t = std::shared_ptr<Term>(new Term());
  t->var_index_ = index;
  t->max_var_index_ = index;
  return t;
}

TermPtr Term::app(std::string op_name, std::vector<TermPtr> children) {
  if (op_name.empty()) throw ParamError("operation name must be non-empty");
  auto t = std::shared_ptr<Term>(new Term());
  t->op_name_ = std::move(op_name);
  int mv = 0;
  for (const TermPtr& c : children) mv = std::max(mv, c->max_var_index());
  t->max_var_index_ = mv;
  t->children_ = std::move(children);
  return t;
}

bool term_equal(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var_index() == b.var_index();
  if (a.op_name() != b.op_name()) return false;
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!term_equal(*a.children()[i], *b.children()[i])) return false;
  return true;
}

namespace {

void format_into(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += 'x';
    out += std::to_string(t.var_index());
    return;
  }
  out += '(';
  out += t.op_name();
  for (const TermPtr& c : t.children()) {
    out += ' ';
    format_into(*c, out);
  }
  out += ')';
}

bool is_op_char(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '+' || c == '*' || c == '-' || c >= 0x80;
}

bool is_atom_char(unsigned char c) { return is_op_char(c) || std::isdigit(c); }

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  std::string_view read_atom() {
    std::size_t start = pos;
    while (pos < text.size() && is_atom_char(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }
};

bool atom_is_var(std::string_view atom) {
  if (atom.size() < 2 || atom[0] != 'x') return false;
  return std::all_of(atom.begin() + 1, atom.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

void require_op_atom(std::string_view atom, std::size_t at) {
  for (char c : atom)
    if (std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("operation symbol '" + std::string(atom) + "' may not contain digits", at);
}

TermPtr parse_expr(Lexer& lx) {
  lx.skip_ws();
  if (lx.eof()) throw ParseError("unexpected end of input", lx.pos);
  if (lx.peek() == ')') throw ParseError("unexpected ')'", lx.pos);

  if (lx.peek() == '(') {
    std::size_t open = lx.pos;
    ++lx.pos;
    lx.skip_ws();
    std::size_t head_at = lx.pos;
    std::string_view head = lx.read_atom();
    if (head.empty())
      throw ParseError("expected operation symbol after '('", head_at);
    if (atom_is_var(head))
      throw ParseError("expected operation symbol after '(', got variable '" + std::string(head) + "'",
                       head_at);
    require_op_atom(head, head_at);

    std::vector<TermPtr> children;
    while (true) {
      lx.skip_ws();
      if (lx.eof()) throw ParseError("unclosed '(' ", open);
      if (lx.peek() == ')') {
        ++lx.pos;
        break;
      }
      children.push_back(parse_expr(lx));
    }
    return Term::app(std::string(head), std::move(children));
  }

  std::size_t at = lx.pos;
  std::string_view atom = lx.read_atom();
  if (atom.empty())
    throw ParseError(std::string("unexpected character '") + lx.peek() + "'", at);
  if (!atom_is_var(atom))
    throw ParseError("expected a variable or '(', got '" + std::string(atom) + "'", at);
  int index = 0;
  auto [p, ec] = std::from_chars(atom.data() + 1, atom.data() + atom.size(), index);
  if (ec != std::errc() || p != atom.data() + atom.size() || index < 1)
    throw ParseError("bad variable index in '" + std::string(atom) + "'", at);
  return Term::var(index);
}

TermPtr substitute_memo(const TermPtr& t, const std::vector<TermPtr>& args,
                        std::unordered_map<const Term*, TermPtr>& memo) {
  if (t->is_var()) {
    const int i = t->var_index();
    if (i > static_cast<int>(args.size()))
      throw ParamError("substitute: term uses x" + std::to_string(i) + " but only " +
                       std::to_string(args.size()) + " arguments were given");
    return args[i - 1];
  }
  auto it = memo.find(t.get());
  if (it != memo.end()) return it->second;
  std::vector<TermPtr> children;
  children.reserve(t->children().size());
  for (const TermPtr& c : t->children()) children.push_back(substitute_memo(c, args, memo));
  TermPtr out = Term::app(t->op_name(), std::move(children));
  memo.emplace(t.get(), out);
  return out;
}

}  // namespace

std::string format_term(const Term& t) {
  std::string out;
  format_into(t, out);
  return out;
}

TermPtr parse_term(std::string_view text) {
  Lexer lx{text};
  TermPtr t = parse_expr(lx);
  lx.skip_ws();
  if (!lx.eof()) throw ParseError("trailing input after term", lx.pos);
  return t;
}

TermPtr substitute(const TermPtr& t, const std::vector<TermPtr>& args) {
  std::unordered_map<const Term*, TermPtr> memo;
  return substitute_memo(t, args, memo);
}

}  // namespace majterm
