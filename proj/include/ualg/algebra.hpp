#ifndef UALG_ALGEBRA_HPP
#define UALG_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ualg {

/// Thrown when a closure or table would exceed a configured size limit.
/// Distinct from logic errors: callers map it to a dedicated exit status.
struct ResourceExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t closure_budget = 1'000'000;  // max elements in any generated set
  std::size_t table_budget = 16'000'000;   // max entries in any materialized table
  int tolerance_enum_max = 6;              // max universe size for exhaustive relation scans
};

struct Operation {
  std::string symbol;
  int arity = 0;
  std::vector<int> table;  // row-major, last argument fastest
};

/// A finite algebra on universe {0, ..., size-1} with finitary operation
/// tables. Immutable after construction.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size, std::vector<Operation> ops);

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  const std::vector<Operation>& operations() const { return ops_; }
  const Operation& operation(int i) const { return ops_.at(static_cast<std::size_t>(i)); }
  int num_operations() const { return static_cast<int>(ops_.size()); }

  int apply(int op_index, std::span<const int> args) const;

  /// Index of the table row for an argument tuple (last argument fastest).
  std::size_t row_index(int op_index, std::span<const int> args) const;

  bool all_unary() const;

 private:
  std::string name_;
  int n_;
  std::vector<Operation> ops_;
};

/// A term over the algebra's operation symbols and variables x0, x1, ...
/// Leaves carry a variable index; internal nodes an operation index.
struct Term {
  int var = -1;  // >= 0 for a leaf
  int op = -1;   // >= 0 for an application node
  std::vector<Term> children;

  static Term variable(int i) { return Term{i, -1, {}}; }
  static Term apply(int op, std::vector<Term> ch) { return Term{-1, op, std::move(ch)}; }
};

int eval_term(const FiniteAlgebra& a, const Term& t, std::span<const int> env);
std::string term_to_string(const FiniteAlgebra& a, const Term& t);
int term_max_var(const Term& t);

/// Direct power A^k. Elements are base-n integers, coordinate 0 least
/// significant; all operations act coordinatewise.
FiniteAlgebra power(const FiniteAlgebra& a, int k, const Limits& limits = {});

std::vector<int> decode_tuple(int element, int base, int width);
int encode_tuple(std::span<const int> tuple, int base);

/// Parse / serialize the algebra document format:
/// {"name": str, "size": int, "ops": [{"symbol": str, "arity": int, "table": [int...]}]}
FiniteAlgebra algebra_from_json(const std::string& text);
FiniteAlgebra load_algebra_file(const std::string& path);
std::string algebra_to_json(const FiniteAlgebra& a);

/// Subuniverse of A generated by X (worklist closure under all operations).
std::vector<int> subuniverse(const FiniteAlgebra& a, const std::vector<int>& generators);

/// The induced algebra on a subuniverse B (sorted), with the index map B -> A.
struct SubAlgebra {
  FiniteAlgebra algebra;
  std::vector<int> elements;  // new index -> old element
};
SubAlgebra induced_subalgebra(const FiniteAlgebra& a, std::vector<int> elements);

}  // namespace ualg

#endif  // UALG_ALGEBRA_HPP
