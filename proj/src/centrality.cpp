#include "ualg/centrality.hpp"

#include <algorithm>
#include <set>

#include "ualg/subpower.hpp"

namespace ualg {

int MatrixSet::encode(int p, int q, int r, int s, int n) {
  return ((s * n + r) * n + q) * n + p;
}

std::array<int, 4> MatrixSet::decode(int code, int n) {
  std::array<int, 4> t;
  for (int i = 0; i < 4; ++i) {
    t[static_cast<std::size_t>(i)] = code % n;
    code /= n;
  }
  return t;
}

bool MatrixSet::contains(int p, int q, int r, int s) const {
  return std::binary_search(members.begin(), members.end(), encode(p, q, r, s, base));
}

MatrixSet matrix_algebra(const FiniteAlgebra& a, const Tolerance& s, const Tolerance& t,
                         const Limits& limits) {
  const int n = a.size();
  if (s.size() != n || t.size() != n) throw std::runtime_error("matrix_algebra: size mismatch");
  std::size_t n4 = static_cast<std::size_t>(n) * n * n * n;
  if (n4 > limits.closure_budget) {
    throw ResourceExhausted("matrix_algebra: n^4 exceeds closure budget");
  }
  std::vector<std::vector<std::uint8_t>> gens;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.test(x, y)) {
        gens.push_back({static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(x),
                        static_cast<std::uint8_t>(y), static_cast<std::uint8_t>(y)});
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (t.test(u, v)) {
        gens.push_back({static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v),
                        static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)});
      }
    }
  }
  SubpowerClosure c = close_subpower(a, gens, limits.closure_budget);
  if (c.outcome == SubpowerClosure::Outcome::kBudgetExhausted) {
    throw ResourceExhausted("matrix_algebra: closure exceeded budget");
  }
  MatrixSet m;
  m.base = n;
  m.members.reserve(c.vectors.size());
  for (const auto& v : c.vectors) {
    m.members.push_back(MatrixSet::encode(v[0], v[1], v[2], v[3], n));
  }
  std::sort(m.members.begin(), m.members.end());
  m.members.erase(std::unique(m.members.begin(), m.members.end()), m.members.end());
  return m;
}

namespace {

CentralityCertificate scan_matrices(const std::vector<std::array<int, 4>>& matrices,
                                    const Congruence& delta) {
  CentralityCertificate cert;
  for (const auto& m : matrices) {
    auto [p, q, r, s] = m;
    if (delta.related(p, q) && !delta.related(r, s)) {
      if (!cert.witness || m < *cert.witness) cert.witness = m;
      cert.verdict = false;
    }
  }
  return cert;
}

}  // namespace

CentralityCertificate centralizes(const FiniteAlgebra& a, const Tolerance& s, const Tolerance& t,
                                  const Congruence& delta, const Limits& limits) {
  if (delta.size() != a.size()) throw std::runtime_error("centralizes: size mismatch");
  MatrixSet m = matrix_algebra(a, s, t, limits);
  std::vector<std::array<int, 4>> mats;
  mats.reserve(m.members.size());
  for (int code : m.members) mats.push_back(MatrixSet::decode(code, m.base));
  return scan_matrices(mats, delta);
}

CentralityCertificate centralizes(const FiniteAlgebra& a, const Congruence& s, const Congruence& t,
                                  const Congruence& delta, const Limits& limits) {
  return centralizes(a, Tolerance::unchecked(s.to_relation()),
                     Tolerance::unchecked(t.to_relation()), delta, limits);
}

bool is_abelian(const FiniteAlgebra& a, const Tolerance& t, const Limits& limits) {
  return centralizes(a, t, t, Congruence::equality(a.size()), limits).verdict;
}

bool is_abelian(const FiniteAlgebra& a, const Congruence& t, const Limits& limits) {
  return is_abelian(a, Tolerance::unchecked(t.to_relation()), limits);
}

Congruence commutator(const FiniteAlgebra& a, const Congruence& alpha, const Congruence& beta,
                      const Limits& limits) {
  const int n = a.size();
  MatrixSet m = matrix_algebra(a, Tolerance::unchecked(alpha.to_relation()),
                               Tolerance::unchecked(beta.to_relation()), limits);
  std::vector<std::array<int, 4>> mats;
  mats.reserve(m.members.size());
  for (int code : m.members) mats.push_back(MatrixSet::decode(code, m.base));

  Congruence delta = Congruence::equality(n);
  while (true) {
    std::vector<std::pair<int, int>> forced;
    for (const auto& [p, q, r, s] : mats) {
      if (delta.related(p, q) && !delta.related(r, s)) forced.emplace_back(r, s);
    }
    if (forced.empty()) return delta;
    for (int i = 0; i < n; ++i) forced.emplace_back(i, delta.root(i));
    delta = generate_congruence(a, forced);
  }
}

CentralityCertificate centralizes_unary_scan(const FiniteAlgebra& a, const Tolerance& s,
                                             const Tolerance& t, const Congruence& delta) {
  if (!a.all_unary()) {
    throw std::runtime_error("centralizes_unary_scan requires an all-unary signature");
  }
  const int n = a.size();
  // monoid of unary term operations, as function tables
  std::set<std::vector<int>> monoid;
  std::vector<int> ident(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ident[static_cast<std::size_t>(i)] = i;
  monoid.insert(ident);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> batch(monoid.begin(), monoid.end());
    for (const auto& g : batch) {
      for (int o = 0; o < a.num_operations(); ++o) {
        std::vector<int> h(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          h[static_cast<std::size_t>(i)] = a.operation(o).table[static_cast<std::size_t>(
              g[static_cast<std::size_t>(i)])];
        }
        grew = monoid.insert(std::move(h)).second || grew;
      }
    }
  }
  std::vector<std::array<int, 4>> mats;
  for (const auto& g : monoid) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (s.test(x, y)) {
          mats.push_back({g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(x)],
                          g[static_cast<std::size_t>(y)], g[static_cast<std::size_t>(y)]});
        }
        if (t.test(x, y)) {
          mats.push_back({g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)],
                          g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)]});
        }
      }
    }
  }
  return scan_matrices(mats, delta);
}

std::vector<ClauseReport> tc_property_suite(const FiniteAlgebra& a, const TcInstance& inst,
                                            const Limits& limits) {
  std::vector<ClauseReport> out;
  const int n = a.size();
  auto cent = [&](const Tolerance& s, const Tolerance& t, const Congruence& d) {
    return centralizes(a, s, t, d, limits).verdict;
  };
  const bool c_std = cent(inst.s, inst.t, inst.delta);

  // (1) monotonicity in the first two variables
  {
    ClauseReport r{1, c_std, true, ""};
    if (c_std) r.holds = cent(inst.s_sub, inst.t_sub, inst.delta);
    out.push_back(r);
  }
  // (2) C(S,T;d) <=> C(Cg(S),T;d)
  {
    Congruence cg = transitive_closure(a, inst.s);
    bool rhs = cent(Tolerance::unchecked(cg.to_relation()), inst.t, inst.delta);
    out.push_back({2, true, c_std == rhs, ""});
  }
  // (3) C(S,T;d) <=> C(S, d o T o d; d)
  {
    bool rhs = cent(inst.s, sandwich(a, inst.delta, inst.t), inst.delta);
    out.push_back({3, true, c_std == rhs, ""});
  }
  // (4) T n d == T n d2 implies equivalence
  {
    BinaryRelation td = inst.t.rel().intersect(inst.delta.to_relation());
    BinaryRelation td2 = inst.t.rel().intersect(inst.delta2.to_relation());
    ClauseReport r{4, td == td2, true, ""};
    if (r.applicable) r.holds = (c_std == cent(inst.s, inst.t, inst.delta2));
    out.push_back(r);
  }
  // (5) semidistributivity in the first variable
  {
    bool h1 = cent(Tolerance::unchecked(inst.alpha1.to_relation()), inst.t, inst.delta);
    bool h2 = cent(Tolerance::unchecked(inst.alpha2.to_relation()), inst.t, inst.delta);
    ClauseReport r{5, h1 && h2, true, ""};
    if (r.applicable) {
      Congruence join = inst.alpha1.join(inst.alpha2);
      r.holds = cent(Tolerance::unchecked(join.to_relation()), inst.t, inst.delta);
    }
    out.push_back(r);
  }
  // (6) meet-closure in the third variable
  {
    bool h2 = cent(inst.s, inst.t, inst.delta2);
    ClauseReport r{6, c_std && h2, true, ""};
    if (r.applicable) r.holds = cent(inst.s, inst.t, inst.delta.meet(inst.delta2));
    out.push_back(r);
  }
  // (7) T n (S o (T n d) o S) <= d implies C(S,T;d)
  {
    BinaryRelation td = inst.t.rel().intersect(inst.delta.to_relation());
    BinaryRelation comp = inst.s.rel().compose(td).compose(inst.s.rel());
    BinaryRelation lhs = inst.t.rel().intersect(comp);
    ClauseReport r{7, lhs.subset_of(inst.delta.to_relation()), true, ""};
    if (r.applicable) r.holds = c_std;
    out.push_back(r);
  }
  // (8) beta ^ (alpha v (beta ^ d)) <= d implies C(alpha,beta;d), congruences
  {
    Congruence inner = inst.beta.meet(inst.delta);
    Congruence lhs = inst.beta.meet(inst.alpha1.join(inner));
    ClauseReport r{8, lhs.refines(inst.delta), true, ""};
    if (r.applicable) {
      r.holds = cent(Tolerance::unchecked(inst.alpha1.to_relation()),
                     Tolerance::unchecked(inst.beta.to_relation()), inst.delta);
    }
    out.push_back(r);
  }
  // (9) restriction to a subalgebra
  {
    ClauseReport r{9, c_std, true, ""};
    if (c_std) {
      std::vector<int> b = subuniverse(a, inst.sub_seed.empty() ? std::vector<int>{0}
                                                                : inst.sub_seed);
      SubAlgebra sub = induced_subalgebra(a, b);
      Tolerance sb = Tolerance::unchecked(restrict(inst.s.rel(), sub.elements).rel);
      Tolerance tb = Tolerance::unchecked(restrict(inst.t.rel(), sub.elements).rel);
      Congruence db = restrict_congruence(inst.delta, sub.elements);
      r.holds = centralizes(sub.algebra, sb, tb, db, limits).verdict;
    }
    out.push_back(r);
  }
  // (10) quotient by d' <= d
  {
    Congruence dprime = inst.delta.meet(inst.delta2);
    QuotientAlgebra q = quotient(a, dprime);
    Tolerance sq = Tolerance::unchecked(quotient_relation(inst.s.rel(), dprime));
    Tolerance tq = Tolerance::unchecked(quotient_relation(inst.t.rel(), dprime));
    Congruence dq = quotient_congruence(inst.delta, dprime);
    bool rhs = centralizes(q.algebra, sq, tq, dq, limits).verdict;
    out.push_back({10, true, c_std == rhs, ""});
  }
  (void)n;
  return out;
}

}  // namespace ualg
