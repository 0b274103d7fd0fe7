#include "majterm/algebra.hpp"

#include <cassert>
#include <unordered_set>

#include "majterm/errors.hpp"

namespace majterm {

namespace {
constexpr std::size_t kMaxTableEntries = 1'000'000'000;
}

std::size_t table_size(int size, int arity) {
  if (size < 1) throw ParamError("universe size must be positive");
  if (arity < 0) throw ParamError("arity must be non-negative");
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) {
    if (n > kMaxTableEntries / static_cast<std::size_t>(size))
      throw ParamError("operation table too large: size " + std::to_string(size) +
                       " at arity " + std::to_string(arity));
    n *= static_cast<std::size_t>(size);
  }
  return n;
}

int Operation::apply(int size, std::span<const int> args) const {
  assert(static_cast<int>(args.size()) == arity);
  std::size_t pos = 0;
  for (int v : args) pos = pos * static_cast<std::size_t>(size) + static_cast<std::size_t>(v);
  return table[pos];
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, std::vector<Operation> operations)
    : name_(std::move(name)), size_(size), operations_(std::move(operations)) {
  if (size_ < 1) throw ParamError("algebra '" + name_ + "': size must be positive");
  std::unordered_set<std::string> seen;
  for (const Operation& op : operations_) {
    if (op.name.empty())
      throw ParamError("algebra '" + name_ + "': operation with empty name");
    if (!seen.insert(op.name).second)
      throw ParamError("algebra '" + name_ + "': duplicate operation name '" + op.name + "'");
    const std::size_t want = table_size(size_, op.arity);
    if (op.table.size() != want)
      throw ParamError("algebra '" + name_ + "': operation '" + op.name + "' has " +
                       std::to_string(op.table.size()) + " table entries, expected " +
                       std::to_string(want));
    for (int v : op.table)
      if (v < 0 || v >= size_)
        throw ParamError("algebra '" + name_ + "': operation '" + op.name +
                         "' has table entry " + std::to_string(v) +
                         " outside universe 0.." + std::to_string(size_ - 1));
  }
}

const Operation* FiniteAlgebra::find_operation(std::string_view op_name) const {
  for (const Operation& op : operations_)
    if (op.name == op_name) return &op;
  return nullptr;
}

}  // namespace majterm
