#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <set>

#include "ualg/subpower.hpp"
#include "ualg/termsearch.hpp"

using namespace ualg;

namespace {

FiniteAlgebra load(const char* name) {
  return load_algebra_file(std::string(FIXTURES_DIR) + "/" + name);
}

// Oracle: all ternary term operations of a 2-element algebra as 8-entry
// truth tables, generated by naive composition to fixpoint.
std::set<std::array<int, 8>> ternary_clone_2(const FiniteAlgebra& a) {
  REQUIRE(a.size() == 2);
  std::set<std::array<int, 8>> clone;
  // projections: table index bit order follows decode of (x0,x1,x2)
  for (int v = 0; v < 3; ++v) {
    std::array<int, 8> t{};
    for (int i = 0; i < 8; ++i) t[static_cast<std::size_t>(i)] = (i >> v) & 1;
    clone.insert(t);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::array<int, 8>> snap(clone.begin(), clone.end());
    for (int oi = 0; oi < a.num_operations(); ++oi) {
      const int k = a.operation(oi).arity;
      std::vector<int> idx(static_cast<std::size_t>(k), 0);
      while (true) {
        std::array<int, 8> t{};
        for (int i = 0; i < 8; ++i) {
          std::vector<int> args(static_cast<std::size_t>(k));
          for (int j = 0; j < k; ++j)
            args[static_cast<std::size_t>(j)] =
                snap[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]
                    [static_cast<std::size_t>(i)];
          t[static_cast<std::size_t>(i)] = a.apply(oi, args);
        }
        grew = clone.insert(t).second || grew;
        int j = k - 1;
        while (j >= 0 &&
               ++idx[static_cast<std::size_t>(j)] == static_cast<int>(snap.size())) {
          idx[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) break;
      }
    }
  }
  return clone;
}

}  // namespace

TEST_CASE("constraint validation") {
  FiniteAlgebra z2 = load("z2.json");
  TermConstraintSystem c;
  c.arity = 2;
  c.fixed_rows.push_back({{0, 1}, 1});
  CHECK_NOTHROW(c.validate(z2));
  c.fixed_rows.push_back({{0, 2}, 1});  // entry out of range
  CHECK_THROWS(c.validate(z2));
  TermConstraintSystem bad;
  bad.arity = 0;
  CHECK_THROWS(bad.validate(z2));
}

TEST_CASE("empty constraint system yields the first projection") {
  FiniteAlgebra z2 = load("z2.json");
  TermConstraintSystem c;
  c.arity = 3;
  TermWitness w = solve_term_existence(z2, c, 1000);
  REQUIRE(w.outcome == SearchOutcome::kFound);
  REQUIRE(w.term.has_value());
  CHECK(w.term->var == 0);
}

TEST_CASE("conflicting fixed rows are reported as none without search") {
  FiniteAlgebra z2 = load("z2.json");
  TermConstraintSystem c;
  c.arity = 1;
  c.fixed_rows.push_back({{0}, 0});
  c.fixed_rows.push_back({{0}, 1});
  CHECK(solve_term_existence(z2, c, 1000).outcome == SearchOutcome::kNone);
}

TEST_CASE("tiny budget reports resource exhaustion, not none") {
  FiniteAlgebra z4 = load("z4.json");
  Limits tiny;
  tiny.closure_budget = 4;
  CHECK(has_taylor_term(z4, tiny).outcome == SearchOutcome::kResourceExhausted);
}

TEST_CASE("Maltsev search on Z2 finds x+y+z semantics") {
  FiniteAlgebra z2 = load("z2.json");
  TermConstraintSystem c = maltsev_constraints(z2);
  CHECK(c.arity == 3);
  TermWitness w = solve_term_existence(z2, c, 100000);
  REQUIRE(w.outcome == SearchOutcome::kFound);
  REQUIRE(w.term.has_value());
  CHECK(verify_term(z2, *w.term, c));
  // the witness realizes x + y + z (the unique Maltsev operation on Z2)
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        std::array<int, 3> env{x, y, z};
        CHECK(eval_term(z2, *w.term, env) == (x + y + z) % 2);
      }
    }
  }
}

TEST_CASE("Maltsev search on the semilattice agrees with clone enumeration") {
  FiniteAlgebra semi = load("semilattice2.json");
  TermConstraintSystem c = maltsev_constraints(semi);
  CHECK(solve_term_existence(semi, c, 100000).outcome == SearchOutcome::kNone);
  // oracle: no ternary term operation of ({0,1}, meet) satisfies the rows
  for (const auto& t : ternary_clone_2(semi)) {
    auto val = [&](int x, int y, int z) {
      return t[static_cast<std::size_t>(x | (y << 1) | (z << 2))];
    };
    bool maltsev = true;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) maltsev = maltsev && val(x, y, y) == x && val(y, y, x) == x;
    CHECK_FALSE(maltsev);
  }
  // the clone of the 2-element semilattice has exactly 7 ternary members:
  // meets of nonempty variable subsets
  CHECK(ternary_clone_2(semi).size() == 7);
}

TEST_CASE("weak difference terms on the named fixtures") {
  CHECK(find_weak_difference_term(load("z2.json")).outcome == SearchOutcome::kFound);
  CHECK(find_weak_difference_term(load("set2.json")).outcome == SearchOutcome::kNone);
  TermWitness lat = find_weak_difference_term(load("lattice2.json"));
  REQUIRE(lat.outcome == SearchOutcome::kFound);
  // only the equality congruence of the 2-element lattice is abelian, so the
  // constraints reduce to idempotence and the first projection qualifies
  REQUIRE(lat.term.has_value());
  CHECK(lat.term->var == 0);
  // the found Z2 witness really is a weak difference term on the full
  // (abelian) congruence
  TermWitness z2w = find_weak_difference_term(load("z2.json"));
  FiniteAlgebra z2 = load("z2.json");
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      std::array<int, 3> aab{a, a, b};
      std::array<int, 3> baa{b, a, a};
      CHECK(eval_term(z2, *z2w.term, aab) == b);
      CHECK(eval_term(z2, *z2w.term, baa) == b);
    }
  }
}

TEST_CASE("tolerance weak difference terms") {
  CHECK(find_tolerance_wdt(load("z2.json")).outcome == SearchOutcome::kFound);
  CHECK(find_tolerance_wdt(load("set2.json")).outcome == SearchOutcome::kNone);
  CHECK(find_tolerance_wdt(load("one.json")).outcome == SearchOutcome::kFound);
}

TEST_CASE("Taylor term via the Siggers system") {
  FiniteAlgebra z2 = load("z2.json");
  TermConstraintSystem sc = siggers_constraints(z2);
  CHECK(sc.arity == 4);
  CHECK(sc.fixed_rows.size() == 2);        // idempotence, one per element
  CHECK(sc.equal_row_pairs.size() == 8);   // one per triple (a,r,e)

  TermWitness w = has_taylor_term(z2);
  REQUIRE(w.outcome == SearchOutcome::kFound);
  CHECK(verify_term(z2, *w.term, sc));

  TermWitness semi = has_taylor_term(load("semilattice2.json"));
  REQUIRE(semi.outcome == SearchOutcome::kFound);
  CHECK(verify_term(load("semilattice2.json"), *semi.term, siggers_constraints(load("semilattice2.json"))));

  // pure 2-set: only projections, and no projection satisfies
  // s(a,r,e,a) = s(r,a,r,e) on all triples
  CHECK(has_taylor_term(load("set2.json")).outcome == SearchOutcome::kNone);
}

TEST_CASE("subpower closure provenance reconstructs verified terms") {
  FiniteAlgebra z2 = load("z2.json");
  // generators: columns of the two variables on all 4 input pairs
  std::vector<std::vector<std::uint8_t>> gens = {{0, 0, 1, 1}, {0, 1, 0, 1}};
  SubpowerClosure c = close_subpower(z2, gens, 100);
  CHECK(c.outcome == SubpowerClosure::Outcome::kCompleted);
  // the closure is the subgroup of Z2^4 spanned by the generators: 4 vectors
  CHECK(c.size() == 4);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Term t = reconstruct_term(c, static_cast<int>(i));
    for (int row = 0; row < 4; ++row) {
      std::array<int, 2> env{gens[0][static_cast<std::size_t>(row)],
                             gens[1][static_cast<std::size_t>(row)]};
      CHECK(eval_term(z2, t, env) == c.vectors[i][static_cast<std::size_t>(row)]);
    }
  }
}
