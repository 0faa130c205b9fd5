#ifndef UALG_CENTRALITY_HPP
#define UALG_CENTRALITY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ualg/relations.hpp"

namespace ualg {

/// The set M(S,T) of 2x2 matrices [[p,q],[r,s]] realized by terms: the
/// subuniverse of A^4 generated by the row generators (a,a,b,b) for
/// (a,b) in S and the column generators (u,v,u,v) for (u,v) in T.
/// Tuples are stored encoded base n, coordinate p least significant.
struct MatrixSet {
  int base = 0;
  std::vector<int> members;  // sorted encoded 4-tuples

  bool contains(int p, int q, int r, int s) const;
  static int encode(int p, int q, int r, int s, int n);
  static std::array<int, 4> decode(int code, int n);
};

MatrixSet matrix_algebra(const FiniteAlgebra& a, const Tolerance& s, const Tolerance& t,
                         const Limits& limits = {});

/// Verdict of the term condition C(S,T;delta); on failure the
/// lexicographically least violating matrix (p,q,r,s) with (p,q) in delta
/// and (r,s) not in delta.
struct CentralityCertificate {
  bool verdict = true;
  std::optional<std::array<int, 4>> witness;
};

CentralityCertificate centralizes(const FiniteAlgebra& a, const Tolerance& s, const Tolerance& t,
                                  const Congruence& delta, const Limits& limits = {});
CentralityCertificate centralizes(const FiniteAlgebra& a, const Congruence& s, const Congruence& t,
                                  const Congruence& delta, const Limits& limits = {});

/// C(T,T;0).
bool is_abelian(const FiniteAlgebra& a, const Tolerance& t, const Limits& limits = {});
bool is_abelian(const FiniteAlgebra& a, const Congruence& t, const Limits& limits = {});

/// The term-condition commutator [alpha,beta]: least congruence delta with
/// C(alpha,beta;delta), by fixpoint iteration from the equality relation.
Congruence commutator(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta,
                      const Limits& limits = {});

/// Independent decision path for all-unary signatures: enumerates the monoid
/// of unary term operations and scans the induced matrices directly, with no
/// shared code with matrix_algebra. Used by the witness hunt to double-check
/// candidates.
CentralityCertificate centralizes_unary_scan(const FiniteAlgebra& a, const Tolerance& s,
                                             const Tolerance& t, const Congruence& delta);

/// One sampled input bundle for the centralizer property contract.
/// sub_tolerance_* are constructed inside their counterparts; alpha/beta/
/// delta/delta2 are congruences of A; sub_seed generates the subalgebra used
/// by the restriction clause.
struct TcInstance {
  Tolerance s, t;
  Tolerance s_sub, t_sub;  // s_sub subset of s, t_sub subset of t
  Congruence alpha1, alpha2, beta, delta, delta2;
  std::vector<int> sub_seed;
};

struct ClauseReport {
  int clause = 0;       // 1..10
  bool applicable = false;  // hypothesis held on this instance
  bool holds = true;        // conclusion verified (true when not applicable)
  std::string detail;
};

/// Evaluate clauses (1)-(10) of the centralizer property contract on one
/// instance. Every clause is a theorem, so holds == false on an applicable
/// instance indicates an engine bug.
std::vector<ClauseReport> tc_property_suite(const FiniteAlgebra& a, const TcInstance& inst,
                                            const Limits& limits = {});

}  // namespace ualg

#endif  // UALG_CENTRALITY_HPP
