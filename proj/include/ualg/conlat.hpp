#ifndef UALG_CONLAT_HPP
#define UALG_CONLAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ualg/centrality.hpp"
#include "ualg/relations.hpp"

namespace ualg {

/// The congruence lattice of a finite algebra: all congruences in a fixed
/// order (sorted by canonical root array), with refinement, meet and join
/// tables.
class CongruenceLattice {
 public:
  explicit CongruenceLattice(const FiniteAlgebra& a, const Limits& limits = {});

  int size() const { return static_cast<int>(cons_.size()); }
  const Congruence& at(int i) const { return cons_[static_cast<std::size_t>(i)]; }
  const std::vector<Congruence>& congruences() const { return cons_; }

  int bottom() const { return bottom_; }  // index of the equality congruence
  int top() const { return top_; }        // index of the full congruence

  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i * size() + j)]; }
  int meet(int i, int j) const { return meet_[static_cast<std::size_t>(i * size() + j)]; }
  int join(int i, int j) const { return join_[static_cast<std::size_t>(i * size() + j)]; }
  int index_of(const Congruence& c) const;  // -1 if absent

  /// Covering pairs (x,y): x < y with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

 private:
  std::vector<Congruence> cons_;
  std::vector<char> leq_;
  std::vector<int> meet_, join_;
  int bottom_ = -1, top_ = -1;
};

/// An N5 sublattice with the labeling bottom < delta < theta < alpha,
/// bottom < beta < alpha, beta incomparable to both delta and theta.
struct LabeledPentagon {
  int bottom = -1, beta = -1, delta = -1, theta = -1, alpha = -1;
  // side conditions, filled per search mode
  std::optional<bool> alpha_commutator_zero;     // [alpha,alpha] = 0
  std::optional<bool> cent_theta_alpha_delta;    // C(theta,alpha;delta)
  std::optional<bool> cent_beta_beta_beta_delta; // C(beta,beta;beta^delta)
};

/// Order-theoretic re-validation, independent of the search loop.
bool pentagon_shape_ok(const CongruenceLattice& l, const LabeledPentagon& p);

enum class PentagonMode { kFig8, kFig9 };

/// All labeled pentagons of Con(A). kFig8 keeps pentagons with bottom = 0
/// and evaluates [alpha,alpha]=0 and C(theta,alpha;delta); kFig9 keeps
/// pentagons with bottom = beta^delta and evaluates C(beta,beta;beta^delta).
/// Output order is lexicographic on (bottom,beta,delta,theta,alpha).
std::vector<LabeledPentagon> find_pentagons(const CongruenceLattice& l, PentagonMode mode,
                                            const FiniteAlgebra& a, const Limits& limits = {});

enum class MDefProperty { kAbelianToleranceClosure, kPerspectiveIntervals, kForbiddenPentagon };

struct PropertyVerdict {
  bool holds = true;
  std::string witness;  // replayable description on failure
};

/// The three per-algebra checks behind the weak-difference-term
/// characterization:
///   A: every abelian tolerance generates an abelian congruence;
///   B: perspective congruence intervals agree on abelianness;
///   C: no fig9 pentagon whose side condition holds.
PropertyVerdict check_property(const FiniteAlgebra& a, MDefProperty which,
                               const Limits& limits = {});

/// Hasse diagram of Con(A) in DOT syntax. Nodes carry block notation;
/// covering edges whose congruence quotient is abelian are drawn dashed;
/// nodes of the given pentagons are highlighted. Output is deterministic.
std::string con_to_dot(const FiniteAlgebra& a, const CongruenceLattice& l,
                       const std::vector<LabeledPentagon>& highlight = {},
                       const Limits& limits = {});

}  // namespace ualg

#endif  // UALG_CONLAT_HPP
