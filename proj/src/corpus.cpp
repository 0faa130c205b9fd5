#include "ualg/corpus.hpp"

#include <sstream>

namespace ualg {

FiniteAlgebra random_algebra(std::mt19937_64& rng, int min_size, int max_size) {
  std::uniform_int_distribution<int> size_dist(min_size, max_size);
  const int n = size_dist(rng);
  std::uniform_int_distribution<int> opcount_dist(1, 3);
  std::uniform_int_distribution<int> arity_dist(1, 2);
  std::uniform_int_distribution<int> elem(0, n - 1);
  const int nops = opcount_dist(rng);
  std::vector<Operation> ops;
  for (int o = 0; o < nops; ++o) {
    Operation op;
    op.symbol = "f" + std::to_string(o);
    op.arity = arity_dist(rng);
    std::size_t rows = 1;
    for (int i = 0; i < op.arity; ++i) rows *= static_cast<std::size_t>(n);
    op.table.resize(rows);
    for (auto& e : op.table) e = elem(rng);
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra("rand", n, std::move(ops));
}

std::vector<FiniteAlgebra> make_corpus(int count, std::uint64_t seed, int min_size, int max_size) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteAlgebra> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_algebra(rng, min_size, max_size));
  return out;
}

namespace {

std::vector<std::pair<int, int>> random_pairs(std::mt19937_64& rng, int n, int max_count) {
  std::uniform_int_distribution<int> count_dist(0, max_count);
  std::uniform_int_distribution<int> elem(0, n - 1);
  std::vector<std::pair<int, int>> out;
  const int c = count_dist(rng);
  for (int i = 0; i < c; ++i) out.emplace_back(elem(rng), elem(rng));
  return out;
}

}  // namespace

TcInstance sample_tc_instance(const FiniteAlgebra& a, std::mt19937_64& rng) {
  const int n = a.size();
  std::uniform_int_distribution<int> elem(0, n - 1);
  auto s_pairs = random_pairs(rng, n, 2);
  auto t_pairs = random_pairs(rng, n, 2);
  auto sub_of = [](const std::vector<std::pair<int, int>>& p) {
    return p.empty() ? p : std::vector<std::pair<int, int>>{p.front()};
  };
  TcInstance inst{
      generate_tolerance(a, s_pairs),
      generate_tolerance(a, t_pairs),
      generate_tolerance(a, sub_of(s_pairs)),
      generate_tolerance(a, sub_of(t_pairs)),
      generate_congruence(a, random_pairs(rng, n, 2)),
      generate_congruence(a, random_pairs(rng, n, 2)),
      generate_congruence(a, random_pairs(rng, n, 2)),
      generate_congruence(a, random_pairs(rng, n, 2)),
      generate_congruence(a, random_pairs(rng, n, 2)),
      {}};
  inst.sub_seed = {elem(rng)};
  if (elem(rng) % 2 == 0) inst.sub_seed.push_back(elem(rng));
  return inst;
}

SuiteResult run_tc_suite(const std::vector<FiniteAlgebra>& corpus, int instances_per,
                         std::uint64_t seed, const Limits& limits) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  SuiteResult res;
  for (std::size_t ai = 0; ai < corpus.size(); ++ai) {
    const FiniteAlgebra& a = corpus[ai];
    ++res.algebras;
    for (int i = 0; i < instances_per; ++i) {
      TcInstance inst = sample_tc_instance(a, rng);
      ++res.instances;
      for (const ClauseReport& r : tc_property_suite(a, inst, limits)) {
        if (r.applicable) ++res.applicable_checks;
        if (!r.holds) {
          std::ostringstream os;
          os << "clause " << r.clause << " failed on corpus algebra #" << ai << " instance #" << i
             << " S=" << relation_to_string(inst.s.rel()) << " T=" << relation_to_string(inst.t.rel())
             << " delta=" << inst.delta.block_string() << " delta2=" << inst.delta2.block_string()
             << " alpha1=" << inst.alpha1.block_string() << " alpha2=" << inst.alpha2.block_string()
             << " beta=" << inst.beta.block_string() << " algebra=" << algebra_to_json(a);
          res.failures.push_back(os.str());
        }
      }
    }
  }
  return res;
}

ConsistencyResult run_consistency_checks(const std::vector<FiniteAlgebra>& corpus,
                                         const Limits& limits) {
  ConsistencyResult res;
  for (std::size_t ai = 0; ai < corpus.size(); ++ai) {
    const FiniteAlgebra& a = corpus[ai];
    ++res.algebras;
    TermWitness wdt = find_weak_difference_term(a, limits);
    if (wdt.outcome == SearchOutcome::kResourceExhausted) ++res.inconclusive;
    if (wdt.outcome != SearchOutcome::kFound) continue;
    ++res.wdt_algebras;
    auto fail = [&](const std::string& what) {
      res.failures.push_back("corpus algebra #" + std::to_string(ai) + ": " + what +
                             " algebra=" + algebra_to_json(a));
    };
    // abelian tolerances are congruences with abelian closures
    for (const Tolerance& t : enumerate_tolerances(a, limits)) {
      if (!is_abelian(a, t, limits)) continue;
      if (!t.rel().is_transitive()) {
        fail("abelian tolerance not transitive: " + relation_to_string(t.rel()));
      } else if (!is_abelian(a, transitive_closure(a, t), limits)) {
        fail("abelian tolerance generates non-abelian congruence: " +
             relation_to_string(t.rel()));
      }
    }
    // the tolerance-constraint search must also succeed
    switch (find_tolerance_wdt(a, limits).outcome) {
      case SearchOutcome::kFound: break;
      case SearchOutcome::kResourceExhausted: ++res.inconclusive; break;
      case SearchOutcome::kNone: fail("tolerance weak-difference search returned none"); break;
    }
    // Taylor search must succeed; a budget-limited closure proves nothing
    switch (has_taylor_term(a, limits).outcome) {
      case SearchOutcome::kFound: break;
      case SearchOutcome::kResourceExhausted: ++res.inconclusive; break;
      case SearchOutcome::kNone: fail("Taylor search returned none"); break;
    }
    // forbidden pentagons
    CongruenceLattice l(a, limits);
    for (const LabeledPentagon& p : find_pentagons(l, PentagonMode::kFig8, a, limits)) {
      if (p.alpha_commutator_zero.value_or(false) && p.cent_theta_alpha_delta.value_or(false)) {
        fail("fig8 pentagon with both side conditions");
      }
    }
    for (const LabeledPentagon& p : find_pentagons(l, PentagonMode::kFig9, a, limits)) {
      if (p.cent_beta_beta_beta_delta.value_or(false)) {
        fail("fig9 pentagon with its side condition");
      }
    }
    PropertyVerdict b = check_property(a, MDefProperty::kPerspectiveIntervals, limits);
    if (!b.holds) fail("perspective-interval check failed: " + b.witness);
  }
  return res;
}

namespace {

// Odometer over all tuples of unary operation tables.
class UnaryAlgebraScan {
 public:
  UnaryAlgebraScan(int n, int nops) : n_(n), tables_(static_cast<std::size_t>(nops)) {
    std::size_t rows = static_cast<std::size_t>(n);
    for (auto& t : tables_) t.assign(rows, 0);
  }
  FiniteAlgebra current() const {
    std::vector<Operation> ops;
    for (std::size_t i = 0; i < tables_.size(); ++i) {
      ops.push_back({"u" + std::to_string(i), 1, tables_[i]});
    }
    return FiniteAlgebra("scan", n_, std::move(ops));
  }
  bool next() {
    for (auto& t : tables_) {
      for (auto& e : t) {
        if (++e < n_) return true;
        e = 0;
      }
    }
    return false;
  }

 private:
  int n_;
  std::vector<std::vector<int>> tables_;
};

}  // namespace

HuntResult hunt(const std::string& target, int max_size, int max_ops, const Limits& limits,
                int max_hits) {
  if (target != "err219" && target != "fig8" && target != "fig9") {
    throw std::runtime_error("unknown hunt target: " + target);
  }
  HuntResult res;
  for (int n = 1; n <= max_size; ++n) {
    for (int nops = 0; nops <= max_ops; ++nops) {
      UnaryAlgebraScan scan(n, nops);
      do {
        FiniteAlgebra a = scan.current();
        ++res.algebras_scanned;
        if (target == "err219") {
          Congruence zero = Congruence::equality(n);
          std::vector<Tolerance> tols = enumerate_tolerances_serial(a, limits);
          for (const Tolerance& dl : tols) {
            for (const Tolerance& r : tols) {
              BinaryRelation meet = dl.rel().intersect(r.rel());
              if (!(meet == BinaryRelation::equality(n))) continue;
              if (!centralizes(a, dl, r, zero, limits).verdict) continue;
              if (centralizes(a, r, dl, zero, limits).verdict) continue;
              Err219Witness w;
              w.algebra_json = algebra_to_json(a);
              w.delta_pairs = dl.rel().offdiag_pairs();
              w.r_pairs = r.rel().offdiag_pairs();
              // independent re-verification through the unary scan path
              bool ok = centralizes_unary_scan(a, dl, r, zero).verdict &&
                        !centralizes_unary_scan(a, r, dl, zero).verdict &&
                        meet == BinaryRelation::equality(n);
              if (!ok) {
                throw std::runtime_error(
                    "hunt: matrix and unary-scan paths disagree on a witness");
              }
              w.double_verified = true;
              res.err219.push_back(std::move(w));
              if (static_cast<int>(res.err219.size()) >= max_hits) return res;
            }
          }
        } else {
          PentagonMode mode = (target == "fig8") ? PentagonMode::kFig8 : PentagonMode::kFig9;
          CongruenceLattice l(a, limits);
          if (l.size() < 5) continue;
          for (const LabeledPentagon& p : find_pentagons(l, mode, a, limits)) {
            bool forbidden =
                (mode == PentagonMode::kFig8)
                    ? (p.alpha_commutator_zero.value_or(false) &&
                       p.cent_theta_alpha_delta.value_or(false))
                    : p.cent_beta_beta_beta_delta.value_or(false);
            if (!forbidden) continue;
            std::ostringstream os;
            os << "pentagon beta=" << l.at(p.beta).block_string()
               << " delta=" << l.at(p.delta).block_string()
               << " theta=" << l.at(p.theta).block_string()
               << " alpha=" << l.at(p.alpha).block_string()
               << " bottom=" << l.at(p.bottom).block_string() << " in " << algebra_to_json(a);
            res.pentagon_hits.push_back(os.str());
            if (static_cast<int>(res.pentagon_hits.size()) >= max_hits) return res;
          }
        }
      } while (scan.next());
    }
  }
  return res;
}

}  // namespace ualg
