#ifndef UALG_SUBPOWER_HPP
#define UALG_SUBPOWER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// Breadth-first closure of a set of width-w vectors over A under all
/// operations of A acting coordinatewise, i.e. subuniverse generation in
/// A^w. Every generated vector records how it was produced, so a witnessing
/// term can be rebuilt afterwards. Level-by-level generation keeps run
/// order deterministic and returned witnesses minimal.
class SubpowerClosure {
 public:
  enum class Outcome { kCompleted, kBudgetExhausted, kMatched };

  struct Node {
    int op = -1;            // -1: generator, args[0] is the generator index
    std::vector<int> args;  // indices of argument vectors
  };

  Outcome outcome = Outcome::kCompleted;
  std::vector<std::vector<std::uint8_t>> vectors;  // in generation order
  std::vector<Node> provenance;
  int match = -1;  // first vector satisfying the predicate, or -1

  std::size_t size() const { return vectors.size(); }
};

using MatchFn = std::function<bool(const std::vector<std::uint8_t>&)>;

/// Generate the closure. Stops early at the first match when a predicate is
/// given. `budget` caps the number of stored vectors; `work_budget` caps
/// coordinate evaluations so that runaway closures terminate with
/// kBudgetExhausted rather than running unbounded.
SubpowerClosure close_subpower(const FiniteAlgebra& a,
                               const std::vector<std::vector<std::uint8_t>>& generators,
                               std::size_t budget, const MatchFn& match = nullptr,
                               std::size_t work_budget = 2'000'000'000);

/// Rebuild the term that produced vector `index`; generator i becomes
/// variable x_i.
Term reconstruct_term(const SubpowerClosure& c, int index);

}  // namespace ualg

#endif  // UALG_SUBPOWER_HPP
