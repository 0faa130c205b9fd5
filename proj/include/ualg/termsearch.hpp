#ifndef UALG_TERMSEARCH_HPP
#define UALG_TERMSEARCH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ualg/relations.hpp"

namespace ualg {

/// Row constraints for a sought k-ary term: fixed rows pin the value on an
/// input tuple; equal-row pairs force two input tuples to the same value.
struct TermConstraintSystem {
  int arity = 0;
  std::vector<std::pair<std::vector<int>, int>> fixed_rows;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> equal_row_pairs;

  void validate(const FiniteAlgebra& a) const;
};

enum class SearchOutcome { kFound, kNone, kResourceExhausted };

struct TermWitness {
  SearchOutcome outcome = SearchOutcome::kNone;
  std::optional<Term> term;
};

/// Breadth-first subpower closure over one coordinate per constraint row;
/// the witness term is rebuilt from the closure's provenance log and is
/// re-verified before being returned. kNone is only reported after the
/// closure completed within budget.
TermWitness solve_term_existence(const FiniteAlgebra& a, const TermConstraintSystem& c,
                                 std::size_t budget);

bool verify_term(const FiniteAlgebra& a, const Term& t, const TermConstraintSystem& c);

/// Weak difference term: w(a,a,b)=b=w(b,a,a) for every pair (a,b) lying in
/// an abelian congruence of A.
TermWitness find_weak_difference_term(const FiniteAlgebra& a, const Limits& limits = {});

/// Same rows, with pairs ranging over all abelian tolerances of A.
TermWitness find_tolerance_wdt(const FiniteAlgebra& a, const Limits& limits = {});

/// Maltsev term constraints m(a,b,b)=a, m(b,b,a)=a for all a,b.
TermConstraintSystem maltsev_constraints(const FiniteAlgebra& a);

/// Taylor term existence, decided through the 4-ary Siggers system
/// s(x,x,x,x)=x and s(a,r,e,a)=s(r,a,r,e) over all triples.
TermWitness has_taylor_term(const FiniteAlgebra& a, const Limits& limits = {});

TermConstraintSystem siggers_constraints(const FiniteAlgebra& a);

}  // namespace ualg

#endif  // UALG_TERMSEARCH_HPP
