#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "ualg/centrality.hpp"
#include "ualg/conlat.hpp"
#include "ualg/corpus.hpp"

using namespace ualg;

namespace {

FiniteAlgebra load(const char* name) {
  return load_algebra_file(std::string(FIXTURES_DIR) + "/" + name);
}

// Independent closure oracle for M(S,T): a plain worklist over decoded
// 4-tuples, no shared code with matrix_algebra's subpower machinery.
std::set<std::array<int, 4>> matrix_oracle(const FiniteAlgebra& a, const BinaryRelation& s,
                                           const BinaryRelation& t) {
  const int n = a.size();
  std::set<std::array<int, 4>> out;
  std::vector<std::array<int, 4>> work;
  auto push = [&](std::array<int, 4> m) {
    if (out.insert(m).second) work.push_back(m);
  };
  for (auto [x, y] : s.pairs()) push({x, x, y, y});
  for (auto [u, v] : t.pairs()) push({u, v, u, v});
  while (!work.empty()) {
    // saturate: apply every operation to every argument tuple drawn from out
    work.clear();
    std::vector<std::array<int, 4>> snapshot(out.begin(), out.end());
    for (int oi = 0; oi < a.num_operations(); ++oi) {
      const int k = a.operation(oi).arity;
      std::vector<int> idx(static_cast<std::size_t>(k), 0);
      while (true) {
        std::array<int, 4> m{};
        for (int c = 0; c < 4; ++c) {
          std::vector<int> args(static_cast<std::size_t>(k));
          for (int j = 0; j < k; ++j)
            args[static_cast<std::size_t>(j)] =
                snapshot[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]
                        [static_cast<std::size_t>(c)];
          m[static_cast<std::size_t>(c)] = a.apply(oi, args);
        }
        push(m);
        int j = k - 1;
        while (j >= 0 && ++idx[static_cast<std::size_t>(j)] ==
                             static_cast<int>(snapshot.size())) {
          idx[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) break;
        if (k == 0) break;
      }
      if (k == 0) {
        std::array<int, 4> m{};
        std::vector<int> no_args;
        for (int c = 0; c < 4; ++c) m[static_cast<std::size_t>(c)] = a.apply(oi, no_args);
        push(m);
      }
    }
    if (work.empty()) break;
  }
  (void)n;
  return out;
}

}  // namespace

TEST_CASE("matrix set of Z2 at (full, full) is the even-parity subgroup") {
  FiniteAlgebra z2 = load("z2.json");
  Tolerance full = Tolerance::unchecked(BinaryRelation::full(2));
  MatrixSet m = matrix_algebra(z2, full, full);
  REQUIRE(m.members.size() == 8);
  for (int code : m.members) {
    auto [p, q, r, s] = MatrixSet::decode(code, 2);
    CHECK((p + q + r + s) % 2 == 0);
    CHECK(m.contains(p, q, r, s));
  }
  CHECK_FALSE(m.contains(1, 0, 0, 0));
  // agreement with the independent worklist oracle
  auto oracle = matrix_oracle(z2, full.rel(), full.rel());
  REQUIRE(oracle.size() == m.members.size());
  for (const auto& t : oracle) CHECK(m.contains(t[0], t[1], t[2], t[3]));
}

TEST_CASE("matrix sets match the worklist oracle on random algebras") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    FiniteAlgebra a = random_algebra(rng, 2, 4);
    std::uniform_int_distribution<int> elem(0, a.size() - 1);
    Tolerance s = generate_tolerance(a, {{elem(rng), elem(rng)}});
    Tolerance t = generate_tolerance(a, {{elem(rng), elem(rng)}});
    MatrixSet m = matrix_algebra(a, s, t);
    auto oracle = matrix_oracle(a, s.rel(), t.rel());
    REQUIRE(m.members.size() == oracle.size());
    for (const auto& tup : oracle) CHECK(m.contains(tup[0], tup[1], tup[2], tup[3]));
  }
}

TEST_CASE("encode/decode round trip") {
  for (int code = 0; code < 81; ++code) {
    auto [p, q, r, s] = MatrixSet::decode(code, 3);
    CHECK(MatrixSet::encode(p, q, r, s, 3) == code);
  }
  CHECK(MatrixSet::encode(1, 0, 0, 0, 2) == 1);  // p least significant
}

TEST_CASE("C(1,1;0) fails in the 2-element lattice") {
  FiniteAlgebra lat = load("lattice2.json");
  Tolerance full = Tolerance::unchecked(BinaryRelation::full(2));
  Congruence zero = Congruence::equality(2);
  CentralityCertificate c = centralizes(lat, full, full, zero);
  CHECK_FALSE(c.verdict);
  REQUIRE(c.witness.has_value());
  auto [p, q, r, s] = *c.witness;
  // the witness is a genuine violation inside M(1,1)
  MatrixSet m = matrix_algebra(lat, full, full);
  CHECK(m.contains(p, q, r, s));
  CHECK(p == q);
  CHECK(r != s);
  // (1,1,0,1) is a violating matrix too (realized by the meet term)
  CHECK(m.contains(1, 1, 0, 1));
  // and the returned witness is the lexicographically least violation
  bool seen_less = false;
  for (int code : m.members) {
    auto [pp, qq, rr, ss] = MatrixSet::decode(code, 2);
    if (pp == qq && rr != ss) {
      std::array<int, 4> v{pp, qq, rr, ss};
      if (v < *c.witness) seen_less = true;
    }
  }
  CHECK_FALSE(seen_less);
  CHECK_FALSE(is_abelian(lat, full));
}

TEST_CASE("Z2 is abelian, S3 is not; the A3 congruence of S3 is abelian") {
  FiniteAlgebra z2 = load("z2.json");
  CHECK(is_abelian(z2, Congruence::full(2)));
  FiniteAlgebra s3 = load("s3.json");
  CHECK_FALSE(is_abelian(s3, Congruence::full(6)));
  Congruence a3 = generate_congruence(s3, {{0, 4}});
  CHECK(a3.block_string() == "{0,4,5}{1,2,3}");
  CHECK(is_abelian(s3, a3));
}

TEST_CASE("commutator equals the exhaustive leastness oracle") {
  for (const char* name : {"z2.json", "z4.json", "s3.json", "lattice2.json", "chain3_meet.json"}) {
    FiniteAlgebra a = load(name);
    CongruenceLattice l(a);
    for (int i = 0; i < l.size(); ++i) {
      for (int j = 0; j < l.size(); ++j) {
        Congruence got = commutator(a, l.at(i), l.at(j));
        // least delta in Con(A) with C(alpha,beta;delta)
        Congruence least = Congruence::full(a.size());
        for (int d = 0; d < l.size(); ++d) {
          if (centralizes(a, l.at(i), l.at(j), l.at(d)).verdict) least = least.meet(l.at(d));
        }
        INFO(name << " pair " << i << "," << j);
        CHECK(got == least);
        CHECK(centralizes(a, l.at(i), l.at(j), got).verdict);
      }
    }
  }
}

TEST_CASE("named commutators") {
  FiniteAlgebra s3 = load("s3.json");
  Congruence full6 = Congruence::full(6);
  CHECK(commutator(s3, full6, full6).block_string() == "{0,4,5}{1,2,3}");
  FiniteAlgebra z2 = load("z2.json");
  CHECK(commutator(z2, Congruence::full(2), Congruence::full(2)) == Congruence::equality(2));
}

TEST_CASE("commutator is below the meet and monotone") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 12; ++trial) {
    FiniteAlgebra a = random_algebra(rng, 2, 4);
    CongruenceLattice l(a);
    for (int i = 0; i < l.size(); ++i) {
      for (int j = 0; j < l.size(); ++j) {
        Congruence c = commutator(a, l.at(i), l.at(j));
        CHECK(c.refines(l.at(i).meet(l.at(j))));
      }
    }
  }
}

TEST_CASE("unary-scan path agrees with the matrix path on unary algebras") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> elem(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> t1(3), t2(3);
    for (auto& v : t1) v = elem(rng);
    for (auto& v : t2) v = elem(rng);
    FiniteAlgebra a("u", 3, {{"f", 1, t1}, {"g", 1, t2}});
    Tolerance s = generate_tolerance(a, {{elem(rng), elem(rng)}});
    Tolerance t = generate_tolerance(a, {{elem(rng), elem(rng)}});
    Congruence delta = generate_congruence(a, {{elem(rng), elem(rng)}});
    CHECK(centralizes(a, s, t, delta).verdict == centralizes_unary_scan(a, s, t, delta).verdict);
  }
  // the scan path refuses non-unary signatures
  FiniteAlgebra z2 = load("z2.json");
  Tolerance full = Tolerance::unchecked(BinaryRelation::full(2));
  CHECK_THROWS(centralizes_unary_scan(z2, full, full, Congruence::equality(2)));
}

TEST_CASE("centralizer property contract holds on a small random corpus") {
  auto corpus = make_corpus(12, 2024, 2, 4);
  SuiteResult r = run_tc_suite(corpus, 3, 2024);
  CHECK(r.algebras == 12);
  CHECK(r.instances == 36);
  CHECK(r.applicable_checks > 0);
  for (const auto& f : r.failures) {
    CAPTURE(f);
    CHECK(false);
  }
}
