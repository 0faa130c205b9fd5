#ifndef UALG_CORPUS_HPP
#define UALG_CORPUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ualg/centrality.hpp"
#include "ualg/conlat.hpp"
#include "ualg/termsearch.hpp"

namespace ualg {

/// Seeded random algebras: universe size 2..max_size, 1..3 operations of
/// arity 1 or 2, tables uniform. Deterministic for a fixed seed.
FiniteAlgebra random_algebra(std::mt19937_64& rng, int min_size, int max_size);
std::vector<FiniteAlgebra> make_corpus(int count, std::uint64_t seed, int min_size, int max_size);

TcInstance sample_tc_instance(const FiniteAlgebra& a, std::mt19937_64& rng);

struct SuiteResult {
  int algebras = 0;
  int instances = 0;
  int applicable_checks = 0;
  std::vector<std::string> failures;  // replayable descriptions
};

/// Clauses (1)-(10) on `instances_per` sampled instances per corpus algebra.
SuiteResult run_tc_suite(const std::vector<FiniteAlgebra>& corpus, int instances_per,
                         std::uint64_t seed, const Limits& limits = {});

/// Theorem-consistency checks across the corpus: on every algebra where a
/// weak difference term is found, abelian tolerances must be transitive with
/// abelian generated congruences, the tolerance-constraint search must also
/// succeed, the Taylor search must succeed, no forbidden pentagon may carry
/// its side conditions, and perspective intervals must agree on abelianness.
struct ConsistencyResult {
  int algebras = 0;
  int wdt_algebras = 0;
  // searches that hit the closure budget are inconclusive, never failures
  int inconclusive = 0;
  std::vector<std::string> failures;
};
ConsistencyResult run_consistency_checks(const std::vector<FiniteAlgebra>& corpus,
                                         const Limits& limits = {});

/// One reported witness of the asymmetry hunt: an algebra with tolerances
/// Delta, R such that Delta n R = 0, C(Delta,R;0) holds and C(R,Delta;0)
/// fails. Each hit is re-verified through the unary-scan path before being
/// reported.
struct Err219Witness {
  std::string algebra_json;
  std::vector<std::pair<int, int>> delta_pairs;
  std::vector<std::pair<int, int>> r_pairs;
  bool double_verified = false;
};

struct HuntResult {
  long long algebras_scanned = 0;
  std::vector<Err219Witness> err219;
  std::vector<std::string> pentagon_hits;  // algebra json + pentagon description
};

/// Exhaustive scan over all algebras with universe <= max_size and
/// <= max_ops unary operations.
HuntResult hunt(const std::string& target, int max_size, int max_ops, const Limits& limits = {},
                int max_hits = 16);

}  // namespace ualg

#endif  // UALG_CORPUS_HPP
