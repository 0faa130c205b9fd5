#include "ualg/relations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ualg/subpower.hpp"

namespace ualg {

BinaryRelation::BinaryRelation(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > 64) {
    throw std::runtime_error("relation size must be in [1,64], got " + std::to_string(n));
  }
}

BinaryRelation BinaryRelation::equality(int n) {
  BinaryRelation r(n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BinaryRelation BinaryRelation::full(int n) {
  BinaryRelation r(n);
  const std::uint64_t mask = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  for (int i = 0; i < n; ++i) r.rows_[static_cast<std::size_t>(i)] = mask;
  return r;
}

bool BinaryRelation::is_reflexive() const {
  for (int i = 0; i < n_; ++i) {
    if (!test(i, i)) return false;
  }
  return true;
}

bool BinaryRelation::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (test(i, j) != test(j, i)) return false;
    }
  }
  return true;
}

bool BinaryRelation::is_transitive() const {
  for (int i = 0; i < n_; ++i) {
    std::uint64_t reach = 0;
    std::uint64_t r = row(i);
    for (int j = 0; j < n_; ++j) {
      if ((r >> j) & 1u) reach |= row(j);
    }
    if (reach & ~r) return false;
  }
  return true;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  for (int i = 0; i < n_; ++i) {
    if (row(i) & ~other.row(i)) return false;
  }
  return true;
}

BinaryRelation BinaryRelation::intersect(const BinaryRelation& other) const {
  BinaryRelation r(n_);
  for (int i = 0; i < n_; ++i) r.rows_[static_cast<std::size_t>(i)] = row(i) & other.row(i);
  return r;
}

BinaryRelation BinaryRelation::unite(const BinaryRelation& other) const {
  BinaryRelation r(n_);
  for (int i = 0; i < n_; ++i) r.rows_[static_cast<std::size_t>(i)] = row(i) | other.row(i);
  return r;
}

BinaryRelation BinaryRelation::compose(const BinaryRelation& other) const {
  BinaryRelation r(n_);
  for (int i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t ri = row(i);
    for (int j = 0; j < n_; ++j) {
      if ((ri >> j) & 1u) acc |= other.row(j);
    }
    r.rows_[static_cast<std::size_t>(i)] = acc;
  }
  return r;
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (test(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> BinaryRelation::offdiag_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && test(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

// One operation's compatibility scan: all coordinatewise-related argument
// tuple pairs must have related images.
bool op_compatible(const FiniteAlgebra& a, const Operation& op, int op_index,
                   const BinaryRelation& r) {
  const int n = a.size();
  const int k = op.arity;
  if (k == 0) return r.test(op.table[0], op.table[0]);
  std::size_t rows = 1;
  for (int i = 0; i < k; ++i) rows *= static_cast<std::size_t>(n);
  std::vector<int> as(static_cast<std::size_t>(k)), bs(static_cast<std::size_t>(k));
  for (std::size_t ra = 0; ra < rows; ++ra) {
    std::size_t rem = ra;
    for (int i = k - 1; i >= 0; --i) {
      as[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::size_t>(n));
      rem /= static_cast<std::size_t>(n);
    }
    const int fa = op.table[ra];
    // odometer over related partners of each coordinate
    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    while (true) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        bs[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i)];
        ok = r.test(as[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(i)]);
      }
      if (ok) {
        if (!r.test(fa, op.table[a.row_index(op_index, bs)])) return false;
      }
      int i = k - 1;
      for (; i >= 0; --i) {
        if (++pick[static_cast<std::size_t>(i)] < n) break;
        pick[static_cast<std::size_t>(i)] = 0;
      }
      if (i < 0) break;
    }
  }
  return true;
}

}  // namespace

bool is_compatible_serial(const FiniteAlgebra& a, const BinaryRelation& r) {
  if (r.size() != a.size()) throw std::runtime_error("relation/algebra size mismatch");
  for (int o = 0; o < a.num_operations(); ++o) {
    if (!op_compatible(a, a.operation(o), o, r)) return false;
  }
  return true;
}

bool is_compatible(const FiniteAlgebra& a, const BinaryRelation& r) {
  if (r.size() != a.size()) throw std::runtime_error("relation/algebra size mismatch");
  bool ok = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
#endif
  for (int o = 0; o < a.num_operations(); ++o) {
    ok = ok && op_compatible(a, a.operation(o), o, r);
  }
  return ok;
}

bool is_tolerance(const FiniteAlgebra& a, const BinaryRelation& r) {
  return r.is_reflexive() && r.is_symmetric() && is_compatible_serial(a, r);
}

Tolerance::Tolerance(const FiniteAlgebra& a, BinaryRelation r) : rel_(std::move(r)) {
  if (rel_.size() != a.size()) throw std::runtime_error("tolerance/algebra size mismatch");
  if (!rel_.is_reflexive()) throw std::runtime_error("tolerance must be reflexive");
  if (!rel_.is_symmetric()) throw std::runtime_error("tolerance must be symmetric");
  if (!is_compatible_serial(a, rel_)) throw std::runtime_error("tolerance must be compatible");
}

Congruence::Congruence(std::vector<int> roots) : roots_(std::move(roots)) {
  const int n = static_cast<int>(roots_.size());
  // canonicalize: each class points at its least member
  std::vector<int> least(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int r = roots_[static_cast<std::size_t>(i)];
    if (r < 0 || r >= n) throw std::runtime_error("congruence root out of range");
    if (least[static_cast<std::size_t>(r)] < 0) least[static_cast<std::size_t>(r)] = i;
  }
  for (int i = 0; i < n; ++i) {
    roots_[static_cast<std::size_t>(i)] = least[static_cast<std::size_t>(roots_[static_cast<std::size_t>(i)])];
  }
}

Congruence Congruence::equality(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return Congruence(std::move(r));
}

Congruence Congruence::full(int n) { return Congruence(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Congruence Congruence::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> r(static_cast<std::size_t>(n), -1);
  for (const auto& blk : blocks) {
    if (blk.empty()) throw std::runtime_error("empty block in congruence");
    int least = *std::min_element(blk.begin(), blk.end());
    for (int e : blk) {
      if (e < 0 || e >= n) throw std::runtime_error("block element " + std::to_string(e) + " out of range");
      if (r[static_cast<std::size_t>(e)] != -1) {
        throw std::runtime_error("element " + std::to_string(e) + " appears in two blocks");
      }
      r[static_cast<std::size_t>(e)] = least;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (r[static_cast<std::size_t>(i)] == -1) r[static_cast<std::size_t>(i)] = i;  // singletons may be omitted
  }
  return Congruence(std::move(r));
}

BinaryRelation Congruence::to_relation() const {
  BinaryRelation r(size());
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (related(i, j)) r.set(i, j);
    }
  }
  return r;
}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> where(roots_.size(), -1);
  for (int i = 0; i < size(); ++i) {
    int r = root(i);
    if (where[static_cast<std::size_t>(r)] < 0) {
      where[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(where[static_cast<std::size_t>(r)])].push_back(i);
  }
  return out;
}

int Congruence::num_blocks() const {
  int c = 0;
  for (int i = 0; i < size(); ++i) {
    if (root(i) == i) ++c;
  }
  return c;
}

std::string Congruence::block_string() const {
  std::ostringstream os;
  for (const auto& blk : blocks()) {
    os << "{";
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) os << ",";
      os << blk[i];
    }
    os << "}";
  }
  return os.str();
}

bool Congruence::refines(const Congruence& other) const {
  for (int i = 0; i < size(); ++i) {
    if (other.root(i) != other.root(root(i))) return false;
  }
  return true;
}

Congruence Congruence::meet(const Congruence& other) const {
  const int n = size();
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int j = 0;
    while (!(root(j) == root(i) && other.root(j) == other.root(i))) ++j;
    r[static_cast<std::size_t>(i)] = j;
  }
  return Congruence(std::move(r));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // returns true if a merge happened
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;  // keep least as root
    return true;
  }
  Congruence to_congruence() {
    std::vector<int> r(parent.size());
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) r[static_cast<std::size_t>(i)] = find(i);
    return Congruence(std::move(r));
  }
};

}  // namespace

Congruence Congruence::join(const Congruence& other) const {
  UnionFind uf(size());
  for (int i = 0; i < size(); ++i) {
    uf.unite(i, root(i));
    uf.unite(i, other.root(i));
  }
  return uf.to_congruence();
}

namespace {

// Congruence generation: union-find closed under unary polynomial
// translations (one argument varies, the rest frozen at constants).
Congruence generate_congruence_impl(const FiniteAlgebra& a,
                                    const std::vector<std::pair<int, int>>& pairs) {
  const int n = a.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  auto merge = [&](int x, int y) {
    int rx = uf.find(x), ry = uf.find(y);
    if (rx != ry) {
      uf.unite(rx, ry);
      work.emplace_back(rx, ry);
    }
  };
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw std::runtime_error("pair element out of range");
    }
    merge(x, y);
  }
  std::vector<int> args;
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int o = 0; o < a.num_operations(); ++o) {
      const Operation& op = a.operation(o);
      const int k = op.arity;
      if (k == 0) continue;
      args.assign(static_cast<std::size_t>(k), 0);
      for (int pos = 0; pos < k; ++pos) {
        // iterate constants for the remaining positions
        std::vector<int> consts(static_cast<std::size_t>(k - 1), 0);
        while (true) {
          int ci = 0;
          for (int i = 0; i < k; ++i) {
            if (i != pos) args[static_cast<std::size_t>(i)] = consts[static_cast<std::size_t>(ci++)];
          }
          args[static_cast<std::size_t>(pos)] = x;
          int fx = a.apply(o, args);
          args[static_cast<std::size_t>(pos)] = y;
          int fy = a.apply(o, args);
          merge(fx, fy);
          int i = k - 2;
          for (; i >= 0; --i) {
            if (++consts[static_cast<std::size_t>(i)] < n) break;
            consts[static_cast<std::size_t>(i)] = 0;
          }
          if (i < 0 || k == 1) break;
        }
      }
    }
  }
  return uf.to_congruence();
}

// Tolerance generation: least reflexive symmetric relation containing the
// pairs and closed under full coordinatewise operation application. Unary
// translations alone are not enough without transitivity, so argument
// tuples draw one related pair per coordinate.
BinaryRelation generate_tolerance_impl(const FiniteAlgebra& a,
                                       const std::vector<std::pair<int, int>>& pairs) {
  const int n = a.size();
  BinaryRelation rel = BinaryRelation::equality(n);
  std::vector<std::pair<int, int>> plist = rel.pairs();
  auto add = [&](int x, int y) {
    if (!rel.test(x, y)) {
      rel.set(x, y);
      rel.set(y, x);
      plist.emplace_back(x, y);
      if (x != y) plist.emplace_back(y, x);
    }
  };
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw std::runtime_error("pair element out of range");
    }
    add(x, y);
  }
  std::size_t frontier = 0;
  while (frontier < plist.size()) {
    const std::size_t old_size = plist.size();
    for (int o = 0; o < a.num_operations(); ++o) {
      const Operation& op = a.operation(o);
      const int k = op.arity;
      if (k == 0) continue;
      std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
      std::vector<int> as(static_cast<std::size_t>(k)), bs(static_cast<std::size_t>(k));
      while (true) {
        bool fresh = false;
        for (int i = 0; i < k; ++i) {
          if (pick[static_cast<std::size_t>(i)] >= frontier) { fresh = true; break; }
        }
        if (fresh) {
          for (int i = 0; i < k; ++i) {
            as[static_cast<std::size_t>(i)] = plist[pick[static_cast<std::size_t>(i)]].first;
            bs[static_cast<std::size_t>(i)] = plist[pick[static_cast<std::size_t>(i)]].second;
          }
          add(a.apply(o, as), a.apply(o, bs));
        }
        int i = k - 1;
        for (; i >= 0; --i) {
          if (++pick[static_cast<std::size_t>(i)] < old_size) break;
          pick[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
      }
    }
    frontier = old_size;
  }
  return rel;
}

}  // namespace

BinaryRelation generate_relation(const FiniteAlgebra& a,
                                 const std::vector<std::pair<int, int>>& pairs,
                                 RelationKind kind) {
  if (kind == RelationKind::kCongruence) {
    return generate_congruence_impl(a, pairs).to_relation();
  }
  return generate_tolerance_impl(a, pairs);
}

Tolerance generate_tolerance(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs) {
  return Tolerance(a, generate_tolerance_impl(a, pairs));
}

Congruence generate_congruence(const FiniteAlgebra& a,
                               const std::vector<std::pair<int, int>>& pairs) {
  return generate_congruence_impl(a, pairs);
}

Tolerance sandwich(const FiniteAlgebra& a, const Congruence& delta, const Tolerance& t) {
  if (delta.size() != t.size()) throw std::runtime_error("sandwich: size mismatch");
  BinaryRelation d = delta.to_relation();
  return Tolerance(a, d.compose(t.rel()).compose(d));
}

Congruence relation_to_congruence(const BinaryRelation& rel) {
  if (!rel.is_reflexive() || !rel.is_symmetric() || !rel.is_transitive()) {
    throw std::runtime_error("relation is not an equivalence");
  }
  UnionFind uf(rel.size());
  for (auto [x, y] : rel.offdiag_pairs()) uf.unite(x, y);
  return uf.to_congruence();
}

Congruence transitive_closure(const FiniteAlgebra& a, const Tolerance& t) {
  (void)a;  // compatibility of the closure follows from compatibility of t
  UnionFind uf(t.size());
  for (auto [x, y] : t.rel().offdiag_pairs()) uf.unite(x, y);
  return uf.to_congruence();
}

RestrictedRelation restrict(const BinaryRelation& r, const std::vector<int>& b) {
  if (b.empty()) throw std::runtime_error("restriction to an empty set");
  std::vector<int> elems(b);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  BinaryRelation out(static_cast<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (r.test(elems[i], elems[j])) out.set(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return RestrictedRelation{std::move(out), std::move(elems)};
}

Congruence restrict_congruence(const Congruence& c, const std::vector<int>& b) {
  RestrictedRelation rr = restrict(c.to_relation(), b);
  return relation_to_congruence(rr.rel);
}

BinaryRelation quotient_relation(const BinaryRelation& r, const Congruence& by) {
  std::vector<int> block_index(static_cast<std::size_t>(by.size()), -1);
  int m = 0;
  for (int i = 0; i < by.size(); ++i) {
    if (by.root(i) == i) block_index[static_cast<std::size_t>(i)] = m++;
  }
  BinaryRelation out(m);
  for (int i = 0; i < r.size(); ++i) {
    for (int j = 0; j < r.size(); ++j) {
      if (r.test(i, j)) {
        out.set(block_index[static_cast<std::size_t>(by.root(i))],
                block_index[static_cast<std::size_t>(by.root(j))]);
      }
    }
  }
  return out;
}

Congruence quotient_congruence(const Congruence& c, const Congruence& by) {
  if (!by.refines(c)) throw std::runtime_error("quotient congruence: divisor does not refine");
  std::vector<int> reps;
  for (int i = 0; i < by.size(); ++i) {
    if (by.root(i) == i) reps.push_back(i);
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> roots(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int j = 0;
    while (!c.related(reps[static_cast<std::size_t>(j)], reps[static_cast<std::size_t>(i)])) ++j;
    roots[static_cast<std::size_t>(i)] = j;
  }
  return Congruence(std::move(roots));
}

QuotientAlgebra quotient(const FiniteAlgebra& a, const Congruence& delta) {
  if (delta.size() != a.size()) throw std::runtime_error("quotient: size mismatch");
  if (!is_compatible_serial(a, delta.to_relation())) {
    throw std::runtime_error("quotient: relation is not a congruence (compatibility fails)");
  }
  std::vector<int> block_index(static_cast<std::size_t>(a.size()), -1);
  std::vector<int> reps;
  for (int i = 0; i < a.size(); ++i) {
    if (delta.root(i) == i) {
      block_index[static_cast<std::size_t>(i)] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  for (int i = 0; i < a.size(); ++i) {
    block_index[static_cast<std::size_t>(i)] = block_index[static_cast<std::size_t>(delta.root(i))];
  }
  const int m = static_cast<int>(reps.size());
  std::vector<Operation> ops;
  for (int o = 0; o < a.num_operations(); ++o) {
    const Operation& op = a.operation(o);
    std::size_t rows = 1;
    for (int i = 0; i < op.arity; ++i) rows *= static_cast<std::size_t>(m);
    Operation qop{op.symbol, op.arity, std::vector<int>(rows)};
    std::vector<int> args(static_cast<std::size_t>(op.arity));
    for (std::size_t row = 0; row < rows; ++row) {
      std::size_t rem = row;
      for (int i = op.arity - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(i)] = reps[rem % static_cast<std::size_t>(m)];
        rem /= static_cast<std::size_t>(m);
      }
      qop.table[row] = block_index[static_cast<std::size_t>(a.apply(o, args))];
    }
    ops.push_back(std::move(qop));
  }
  return QuotientAlgebra{FiniteAlgebra(a.name() + "/" + delta.block_string(), m, std::move(ops)),
                         std::move(block_index)};
}

std::vector<int> maximal_block(const FiniteAlgebra& a, const Tolerance& t,
                               const std::vector<int>& seed) {
  for (int x : seed) {
    for (int y : seed) {
      if (!t.test(x, y)) {
        throw std::runtime_error("seed is not pairwise related: (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
      }
    }
  }
  std::vector<bool> in(static_cast<std::size_t>(a.size()), false);
  for (int x : seed) in[static_cast<std::size_t>(x)] = true;
  std::vector<int> b(seed);
  for (int e = 0; e < a.size(); ++e) {
    if (in[static_cast<std::size_t>(e)]) continue;
    bool ok = true;
    for (int x : b) {
      if (!t.test(e, x) || !t.test(x, e)) { ok = false; break; }
    }
    if (ok) {
      in[static_cast<std::size_t>(e)] = true;
      b.push_back(e);
    }
  }
  std::sort(b.begin(), b.end());
  // maximality recheck, independent of the greedy pass
  for (int e = 0; e < a.size(); ++e) {
    if (in[static_cast<std::size_t>(e)]) continue;
    bool addable = true;
    for (int x : b) {
      if (!t.test(e, x)) { addable = false; break; }
    }
    if (addable) throw std::runtime_error("internal: block not maximal");
  }
  return b;
}

namespace {

BinaryRelation relation_from_mask(int n, std::uint64_t mask) {
  BinaryRelation r = BinaryRelation::equality(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1u) {
        r.set(i, j);
        r.set(j, i);
      }
    }
  }
  return r;
}

}  // namespace

std::vector<Tolerance> enumerate_tolerances_serial(const FiniteAlgebra& a, const Limits& limits) {
  const int n = a.size();
  if (n > limits.tolerance_enum_max) {
    throw ResourceExhausted("enumerate_tolerances: universe size " + std::to_string(n) +
                            " exceeds bound " + std::to_string(limits.tolerance_enum_max));
  }
  const int bits = n * (n - 1) / 2;
  std::vector<Tolerance> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    BinaryRelation r = relation_from_mask(n, mask);
    if (is_compatible_serial(a, r)) out.push_back(Tolerance::unchecked(std::move(r)));
  }
  return out;
}

std::vector<Tolerance> enumerate_tolerances(const FiniteAlgebra& a, const Limits& limits) {
  const int n = a.size();
  if (n > limits.tolerance_enum_max) {
    throw ResourceExhausted("enumerate_tolerances: universe size " + std::to_string(n) +
                            " exceeds bound " + std::to_string(limits.tolerance_enum_max));
  }
  const int bits = n * (n - 1) / 2;
  const std::int64_t total = std::int64_t{1} << bits;
  std::vector<char> good(static_cast<std::size_t>(total), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (std::int64_t mask = 0; mask < total; ++mask) {
    BinaryRelation r = relation_from_mask(n, static_cast<std::uint64_t>(mask));
    if (is_compatible_serial(a, r)) good[static_cast<std::size_t>(mask)] = 1;
  }
  std::vector<Tolerance> out;
  for (std::int64_t mask = 0; mask < total; ++mask) {
    if (good[static_cast<std::size_t>(mask)]) {
      out.push_back(Tolerance::unchecked(relation_from_mask(n, static_cast<std::uint64_t>(mask))));
    }
  }
  return out;
}

std::vector<Congruence> enumerate_congruences_bruteforce(const FiniteAlgebra& a) {
  const int n = a.size();
  if (n > 10) throw ResourceExhausted("partition enumeration limited to n <= 10");
  std::vector<Congruence> out;
  // restricted growth strings enumerate all partitions
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  while (true) {
    // rgs values are block ids; convert to roots via first occurrence
    std::vector<int> roots(static_cast<std::size_t>(n));
    std::vector<int> first(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      int b = rgs[static_cast<std::size_t>(i)];
      if (first[static_cast<std::size_t>(b)] < 0) first[static_cast<std::size_t>(b)] = i;
      roots[static_cast<std::size_t>(i)] = first[static_cast<std::size_t>(b)];
    }
    Congruence cand{std::move(roots)};
    if (is_compatible_serial(a, cand.to_relation())) out.push_back(std::move(cand));
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int maxv = 0;
      for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[static_cast<std::size_t>(j)]);
      if (rgs[static_cast<std::size_t>(i)] <= maxv) {
        ++rgs[static_cast<std::size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> idempotent_closure(const FiniteAlgebra& a, const std::vector<int>& x,
                                    const Limits& limits) {
  if (x.empty()) throw std::runtime_error("idempotent_closure: empty starting set");
  const int n = a.size();
  const std::size_t width = static_cast<std::size_t>(1 + n);
  std::vector<std::vector<std::uint8_t>> gens;
  for (int e : x) {
    if (e < 0 || e >= n) throw std::runtime_error("element out of range");
    std::vector<std::uint8_t> g(width);
    g[0] = static_cast<std::uint8_t>(e);
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(1 + i)] = static_cast<std::uint8_t>(i);
    gens.push_back(std::move(g));
  }
  SubpowerClosure c = close_subpower(a, gens, limits.closure_budget);
  if (c.outcome == SubpowerClosure::Outcome::kBudgetExhausted) {
    throw ResourceExhausted("idempotent_closure: subpower closure exceeded budget");
  }
  std::vector<int> out;
  for (const auto& v : c.vectors) {
    bool idem = true;
    for (int i = 0; i < n && idem; ++i) idem = (v[static_cast<std::size_t>(1 + i)] == i);
    if (idem) out.push_back(v[0]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string relation_to_string(const BinaryRelation& r) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    if (!first) os << ",";
    first = false;
    os << "[" << x << "," << y << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace ualg
