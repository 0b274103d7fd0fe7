#include "majterm/algebra_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "majterm/errors.hpp"

namespace majterm {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) tokens.push_back(Token{word, lineno});
  }
  return tokens;
}

struct Reader {
  const std::vector<Token>& tokens;
  std::size_t pos = 0;

  bool eof() const { return pos >= tokens.size(); }

  const Token& next(const std::string& what) {
    if (eof())
      throw ParseError("unexpected end of file while reading " + what,
                       tokens.empty() ? 1 : tokens.back().line);
    return tokens[pos++];
  }

  std::string keyword(const std::string& expected) {
    const Token& t = next("'" + expected + "'");
    if (t.text != expected)
      throw ParseError("expected '" + expected + "', got '" + t.text + "'", t.line);
    return t.text;
  }

  long long integer(const std::string& what) {
    const Token& t = next(what);
    long long v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw ParseError("expected an integer for " + what + ", got '" + t.text + "'", t.line);
    return v;
  }
};

}  // namespace

FiniteAlgebra load_algebra(std::istream& in) {
  const std::vector<Token> tokens = tokenize(in);
  Reader r{tokens};

  r.keyword("algebra");
  const std::string name = r.next("algebra name").text;
  r.keyword("size");
  const long long size = r.integer("size");
  if (size < 1 || size > 1'000'000)
    throw ParseError("size must be in 1..1000000, got " + std::to_string(size),
                     tokens[r.pos - 1].line);

  std::vector<Operation> ops;
  while (!r.eof()) {
    const Token& kw = r.next("'op'");
    if (kw.text != "op")
      throw ParseError("expected 'op', got '" + kw.text + "'", kw.line);
    Operation op;
    op.name = r.next("operation name").text;
    const long long arity = r.integer("arity of '" + op.name + "'");
    if (arity < 0 || arity > 31)
      throw ParseError("arity must be in 0..31, got " + std::to_string(arity),
                       tokens[r.pos - 1].line);
    op.arity = static_cast<int>(arity);
    const std::size_t entries = table_size(static_cast<int>(size), op.arity);
    op.table.reserve(entries);
    for (std::size_t i = 0; i < entries; ++i) {
      const std::size_t at = r.eof() ? 0 : r.pos;
      const long long v = r.integer("table entry " + std::to_string(i + 1) + " of '" + op.name + "'");
      if (v < 0 || v >= size)
        throw ParseError("table entry " + std::to_string(v) + " of operation '" + op.name +
                         "' outside universe 0.." + std::to_string(size - 1),
                         tokens[at].line);
      op.table.push_back(static_cast<int>(v));
    }
    ops.push_back(std::move(op));
  }
  try {
    return FiniteAlgebra(name, static_cast<int>(size), std::move(ops));
  } catch (const ParamError& e) {
    throw ParseError(e.what(), tokens.empty() ? 1 : tokens.back().line);
  }
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open algebra file '" + path + "'");
  return load_algebra(in);
}

std::string save_algebra(const FiniteAlgebra& alg) {
  std::string out;
  out += "algebra " + alg.name() + "\n";
  out += "size " + std::to_string(alg.size()) + "\n";
  for (const Operation& op : alg.operations()) {
    out += "op " + op.name + " " + std::to_string(op.arity) + "\n";
    if (op.arity == 0) {
      out += std::to_string(op.table[0]) + "\n";
      continue;
    }
    const std::size_t row_len = static_cast<std::size_t>(alg.size());
    for (std::size_t i = 0; i < op.table.size(); i += row_len) {
      for (std::size_t j = 0; j < row_len; ++j) {
        if (j) out += ' ';
        out += std::to_string(op.table[i + j]);
      }
      out += '\n';
    }
  }
  return out;
}

void save_algebra_file(const FiniteAlgebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << save_algebra(alg);
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace majterm
