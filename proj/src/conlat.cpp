#include "ualg/conlat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ualg {

CongruenceLattice::CongruenceLattice(const FiniteAlgebra& a, const Limits& limits) {
  const int n = a.size();
  std::set<Congruence> found;
  found.insert(Congruence::equality(n));
  // principal congruences, then closure under join
  std::vector<Congruence> work;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      Congruence c = generate_congruence(a, {{x, y}});
      if (found.insert(c).second) work.push_back(c);
    }
  }
  while (!work.empty()) {
    Congruence c = work.back();
    work.pop_back();
    std::vector<Congruence> snapshot(found.begin(), found.end());
    for (const Congruence& d : snapshot) {
      Congruence j = c.join(d);
      if (found.insert(j).second) {
        if (found.size() > limits.closure_budget) {
          throw ResourceExhausted("congruence_lattice: lattice exceeds closure budget");
        }
        work.push_back(j);
      }
    }
  }
  cons_.assign(found.begin(), found.end());
  const int m = size();
  leq_.assign(static_cast<std::size_t>(m) * m, 0);
  meet_.assign(static_cast<std::size_t>(m) * m, -1);
  join_.assign(static_cast<std::size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      leq_[static_cast<std::size_t>(i * m + j)] = cons_[static_cast<std::size_t>(i)].refines(
          cons_[static_cast<std::size_t>(j)]);
      meet_[static_cast<std::size_t>(i * m + j)] =
          index_of(cons_[static_cast<std::size_t>(i)].meet(cons_[static_cast<std::size_t>(j)]));
      join_[static_cast<std::size_t>(i * m + j)] =
          index_of(cons_[static_cast<std::size_t>(i)].join(cons_[static_cast<std::size_t>(j)]));
      if (meet_[static_cast<std::size_t>(i * m + j)] < 0 ||
          join_[static_cast<std::size_t>(i * m + j)] < 0) {
        throw std::runtime_error("internal: congruence lattice not meet/join closed");
      }
    }
  }
  bottom_ = index_of(Congruence::equality(n));
  top_ = index_of(Congruence::full(n));
  if (bottom_ < 0 || top_ < 0) throw std::runtime_error("internal: missing lattice bounds");
}

int CongruenceLattice::index_of(const Congruence& c) const {
  auto it = std::lower_bound(cons_.begin(), cons_.end(), c);
  if (it != cons_.end() && *it == c) return static_cast<int>(it - cons_.begin());
  return -1;
}

std::vector<std::pair<int, int>> CongruenceLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  const int m = size();
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < m && cover; ++z) {
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      }
      if (cover) out.emplace_back(x, y);
    }
  }
  return out;
}

bool pentagon_shape_ok(const CongruenceLattice& l, const LabeledPentagon& p) {
  std::vector<int> ids{p.bottom, p.beta, p.delta, p.theta, p.alpha};
  std::sort(ids.begin(), ids.end());
  if (std::unique(ids.begin(), ids.end()) != ids.end()) return false;
  if (!(l.leq(p.delta, p.theta) && p.delta != p.theta)) return false;
  if (l.leq(p.beta, p.theta) || l.leq(p.theta, p.beta)) return false;
  if (l.leq(p.beta, p.delta) || l.leq(p.delta, p.beta)) return false;
  if (l.meet(p.beta, p.theta) != p.bottom) return false;
  if (l.meet(p.beta, p.delta) != p.bottom) return false;
  if (l.join(p.beta, p.delta) != p.alpha) return false;
  if (l.join(p.beta, p.theta) != p.alpha) return false;
  return true;
}

std::vector<LabeledPentagon> find_pentagons(const CongruenceLattice& l, PentagonMode mode,
                                            const FiniteAlgebra& a, const Limits& limits) {
  std::vector<LabeledPentagon> out;
  const int m = l.size();
  for (int bottom = 0; bottom < m; ++bottom) {
    for (int beta = 0; beta < m; ++beta) {
      if (beta == bottom || !l.leq(bottom, beta)) continue;
      for (int delta = 0; delta < m; ++delta) {
        if (l.meet(beta, delta) != bottom) continue;
        if (l.leq(beta, delta) || l.leq(delta, beta)) continue;
        const int alpha = l.join(beta, delta);
        for (int theta = 0; theta < m; ++theta) {
          if (theta == delta || !l.leq(delta, theta)) continue;
          if (l.meet(beta, theta) != bottom) continue;
          if (l.join(beta, theta) != alpha) continue;
          if (theta == alpha || theta == bottom) continue;
          LabeledPentagon p{bottom, beta, delta, theta, alpha, {}, {}, {}};
          if (!pentagon_shape_ok(l, p)) continue;
          if (mode == PentagonMode::kFig8) {
            if (bottom != l.bottom()) continue;
            Congruence comm = commutator(a, l.at(alpha), l.at(alpha), limits);
            p.alpha_commutator_zero = (comm == Congruence::equality(a.size()));
            p.cent_theta_alpha_delta =
                centralizes(a, l.at(theta), l.at(alpha), l.at(delta), limits).verdict;
          } else {
            if (l.meet(beta, delta) != bottom) continue;  // bottom = beta ^ delta by search
            p.cent_beta_beta_beta_delta =
                centralizes(a, l.at(beta), l.at(beta), l.at(bottom), limits).verdict;
          }
          out.push_back(p);
        }
      }
    }
  }
  return out;
}

PropertyVerdict check_property(const FiniteAlgebra& a, MDefProperty which, const Limits& limits) {
  PropertyVerdict v;
  switch (which) {
    case MDefProperty::kAbelianToleranceClosure: {
      for (const Tolerance& t : enumerate_tolerances(a, limits)) {
        if (!is_abelian(a, t, limits)) continue;
        Congruence cg = transitive_closure(a, t);
        if (!is_abelian(a, cg, limits)) {
          v.holds = false;
          v.witness = "abelian tolerance " + relation_to_string(t.rel()) +
                      " generates non-abelian congruence " + cg.block_string();
          return v;
        }
      }
      return v;
    }
    case MDefProperty::kPerspectiveIntervals: {
      CongruenceLattice l(a, limits);
      for (int i = 0; i < l.size(); ++i) {
        for (int j = 0; j < l.size(); ++j) {
          const Congruence& alpha = l.at(i);
          const Congruence& beta = l.at(j);
          // interval I[x,y] is abelian iff C(y,y;x)
          bool low = centralizes(a, alpha, alpha, alpha.meet(beta), limits).verdict;
          bool high = centralizes(a, alpha.join(beta), alpha.join(beta), beta, limits).verdict;
          if (low != high) {
            v.holds = false;
            v.witness = "perspective intervals disagree: alpha=" + alpha.block_string() +
                        " beta=" + beta.block_string();
            return v;
          }
        }
      }
      return v;
    }
    case MDefProperty::kForbiddenPentagon: {
      CongruenceLattice l(a, limits);
      for (const LabeledPentagon& p : find_pentagons(l, PentagonMode::kFig9, a, limits)) {
        if (p.cent_beta_beta_beta_delta.value_or(false)) {
          v.holds = false;
          v.witness = "fig9 pentagon with C(beta,beta;beta^delta): beta=" +
                      l.at(p.beta).block_string() + " delta=" + l.at(p.delta).block_string() +
                      " theta=" + l.at(p.theta).block_string();
          return v;
        }
      }
      return v;
    }
  }
  return v;
}

std::string con_to_dot(const FiniteAlgebra& a, const CongruenceLattice& l,
                       const std::vector<LabeledPentagon>& highlight, const Limits& limits) {
  std::set<int> marked;
  for (const LabeledPentagon& p : highlight) {
    marked.insert({p.bottom, p.beta, p.delta, p.theta, p.alpha});
  }
  std::ostringstream os;
  os << "digraph Con {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < l.size(); ++i) {
    os << "  c" << i << " [label=\"" << l.at(i).block_string() << "\"";
    if (marked.count(i)) os << ", style=filled, fillcolor=lightsalmon";
    os << "];\n";
  }
  for (auto [x, y] : l.covers()) {
    bool abelian_quotient = centralizes(a, l.at(y), l.at(y), l.at(x), limits).verdict;
    os << "  c" << x << " -> c" << y;
    if (abelian_quotient) os << " [style=dashed, color=blue]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ualg
