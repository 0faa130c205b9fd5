#ifndef UALG_RELATIONS_HPP
#define UALG_RELATIONS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// Binary relation on {0,...,n-1} as an n x n bit matrix, one 64-bit word
/// per row (universe sizes here never exceed 64).
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(int n);

  static BinaryRelation equality(int n);
  static BinaryRelation full(int n);

  int size() const { return n_; }
  bool test(int a, int b) const { return (rows_[static_cast<std::size_t>(a)] >> b) & 1u; }
  void set(int a, int b) { rows_[static_cast<std::size_t>(a)] |= (std::uint64_t{1} << b); }
  void clear(int a, int b) { rows_[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b); }
  std::uint64_t row(int a) const { return rows_[static_cast<std::size_t>(a)]; }

  bool operator==(const BinaryRelation&) const = default;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool subset_of(const BinaryRelation& other) const;

  BinaryRelation intersect(const BinaryRelation& other) const;
  BinaryRelation unite(const BinaryRelation& other) const;
  /// Relational composition this∘other: (a,c) iff exists b with (a,b) in this
  /// and (b,c) in other.
  BinaryRelation compose(const BinaryRelation& other) const;

  std::vector<std::pair<int, int>> pairs() const;        // sorted
  std::vector<std::pair<int, int>> offdiag_pairs() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Compatibility: for every operation and coordinatewise R-related argument
/// tuples, the images are R-related. Serial reference and the OpenMP kernel
/// used in the hot scans; both return the same answer.
bool is_compatible_serial(const FiniteAlgebra& a, const BinaryRelation& r);
bool is_compatible(const FiniteAlgebra& a, const BinaryRelation& r);

bool is_tolerance(const FiniteAlgebra& a, const BinaryRelation& r);

/// A tolerance: reflexive symmetric compatible relation, validated on entry.
class Tolerance {
 public:
  Tolerance(const FiniteAlgebra& a, BinaryRelation r);
  static Tolerance unchecked(BinaryRelation r) { return Tolerance(std::move(r)); }

  const BinaryRelation& rel() const { return rel_; }
  int size() const { return rel_.size(); }
  bool test(int a, int b) const { return rel_.test(a, b); }

 private:
  explicit Tolerance(BinaryRelation r) : rel_(std::move(r)) {}
  BinaryRelation rel_;
};

/// A congruence as a canonical root array: each element maps to the least
/// element of its block.
class Congruence {
 public:
  Congruence() = default;
  /// From a root/representative array (any representative choice; canonicalized).
  explicit Congruence(std::vector<int> roots);
  static Congruence equality(int n);
  static Congruence full(int n);
  static Congruence from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(roots_.size()); }
  int root(int a) const { return roots_[static_cast<std::size_t>(a)]; }
  bool related(int a, int b) const { return root(a) == root(b); }
  const std::vector<int>& roots() const { return roots_; }

  bool operator==(const Congruence&) const = default;
  bool operator<(const Congruence& o) const { return roots_ < o.roots_; }

  BinaryRelation to_relation() const;
  std::vector<std::vector<int>> blocks() const;  // sorted by least element
  int num_blocks() const;
  std::string block_string() const;  // e.g. "{0,2}{1,3}"

  bool refines(const Congruence& other) const;         // this <= other
  Congruence meet(const Congruence& other) const;      // partition intersection
  Congruence join(const Congruence& other) const;      // transitive closure of union

 private:
  std::vector<int> roots_;
};

enum class RelationKind { kTolerance, kCongruence };

/// Least tolerance / congruence of A containing the given pairs.
/// Tolerance mode closes under reflexivity, symmetry and full coordinatewise
/// operation application; congruence mode additionally under transitivity
/// (via union-find with unary polynomial translations).
BinaryRelation generate_relation(const FiniteAlgebra& a,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 RelationKind kind);

Tolerance generate_tolerance(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs);
Congruence generate_congruence(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs);

/// The sandwich composition delta o T o delta (a tolerance when delta is a
/// congruence; verified).
Tolerance sandwich(const FiniteAlgebra& a, const Congruence& delta, const Tolerance& t);

/// Least congruence containing T: the transitive closure of a tolerance is
/// compatible, hence a congruence.
Congruence transitive_closure(const FiniteAlgebra& a, const Tolerance& t);
Congruence relation_to_congruence(const BinaryRelation& transitive_tolerance);

/// R restricted to B, re-indexed along the sorted order of B.
struct RestrictedRelation {
  BinaryRelation rel;
  std::vector<int> index_map;  // new index -> old element
};
RestrictedRelation restrict(const BinaryRelation& r, const std::vector<int>& b);

Congruence restrict_congruence(const Congruence& c, const std::vector<int>& b);

/// Image of R under the block map of a congruence (relation on the quotient).
BinaryRelation quotient_relation(const BinaryRelation& r, const Congruence& by);
Congruence quotient_congruence(const Congruence& c, const Congruence& by);  // c/by, needs by <= c

/// Quotient algebra A/delta with the canonical block-index map (element ->
/// block index; blocks ordered by least element).
struct QuotientAlgebra {
  FiniteAlgebra algebra;
  std::vector<int> block_index;  // old element -> new element
};
QuotientAlgebra quotient(const FiniteAlgebra& a, const Congruence& delta);

/// Maximal set B >= seed with B^2 <= T, grown greedily in ascending element
/// order. The result is re-checked for maximality.
std::vector<int> maximal_block(const FiniteAlgebra& a, const Tolerance& t,
                               const std::vector<int>& seed);

/// All tolerances of A in a fixed order (filter of all reflexive symmetric
/// bit matrices). Requires n <= limits.tolerance_enum_max.
std::vector<Tolerance> enumerate_tolerances(const FiniteAlgebra& a, const Limits& limits = {});
std::vector<Tolerance> enumerate_tolerances_serial(const FiniteAlgebra& a, const Limits& limits = {});

/// All congruences of A by exhaustive partition filtering (small n only;
/// used as the oracle path next to conlat's principal-congruence route).
std::vector<Congruence> enumerate_congruences_bruteforce(const FiniteAlgebra& a);

/// Smallest superset of X closed under all idempotent term operations of A,
/// computed as a slice of the subuniverse of A^(1+n) generated from the
/// vectors (x_i, 0, 1, ..., n-1).
std::vector<int> idempotent_closure(const FiniteAlgebra& a, const std::vector<int>& x,
                                    const Limits& limits = {});

std::string relation_to_string(const BinaryRelation& r);  // sorted pair list

}  // namespace ualg

#endif  // UALG_RELATIONS_HPP
