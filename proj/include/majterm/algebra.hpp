#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace majterm {

// Total table of a finitary operation on {0, ..., size-1}. Entries are listed
// in lexicographic order of the argument tuple, last argument varying fastest;
// arity 0 is a constant with a single entry.
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<int> table;

  int apply(int size, std::span<const int> args) const;
};

// size^arity with an overflow guard; table lengths and assignment-space sizes
// go through this.
std::size_t table_size(int size, int arity);

// A finite algebra on universe {0, ..., size-1} with named basic operations.
// Immutable after construction, safe to share across concurrent readers.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size, std::vector<Operation> operations);

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  const std::vector<Operation>& operations() const { return operations_; }

  // nullptr when no basic operation has this name.
  const Operation* find_operation(std::string_view op_name) const;

 private:
  std::string name_;
  int size_;
  std::vector<Operation> operations_;
};

}  // namespace majterm
