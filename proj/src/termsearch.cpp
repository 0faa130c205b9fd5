#include "ualg/termsearch.hpp"

#include <algorithm>
#include <map>

#include "ualg/conlat.hpp"
#include "ualg/subpower.hpp"

namespace ualg {

void TermConstraintSystem::validate(const FiniteAlgebra& a) const {
  if (arity < 1) throw std::runtime_error("constraint system arity must be >= 1");
  auto check_tuple = [&](const std::vector<int>& t) {
    if (static_cast<int>(t.size()) != arity) {
      throw std::runtime_error("constraint row width != arity");
    }
    for (int e : t) {
      if (e < 0 || e >= a.size()) throw std::runtime_error("constraint entry out of range");
    }
  };
  for (const auto& [row, out] : fixed_rows) {
    check_tuple(row);
    if (out < 0 || out >= a.size()) throw std::runtime_error("constraint output out of range");
  }
  for (const auto& [u, v] : equal_row_pairs) {
    check_tuple(u);
    check_tuple(v);
  }
}

TermWitness solve_term_existence(const FiniteAlgebra& a, const TermConstraintSystem& c,
                                 std::size_t budget) {
  c.validate(a);
  // one closure coordinate per distinct input tuple
  std::map<std::vector<int>, int> coord;
  auto coord_of = [&](const std::vector<int>& t) {
    auto [it, fresh] = coord.emplace(t, static_cast<int>(coord.size()));
    return it->second;
  };
  std::vector<std::pair<int, int>> fixed;   // (coordinate, required value)
  std::vector<std::pair<int, int>> equal;   // coordinate pairs
  for (const auto& [row, out] : c.fixed_rows) fixed.emplace_back(coord_of(row), out);
  for (const auto& [u, v] : c.equal_row_pairs) equal.emplace_back(coord_of(u), coord_of(v));
  // conflicting fixed rows: nothing can satisfy them
  {
    std::map<int, int> req;
    for (auto [cc, out] : fixed) {
      auto [it, fresh] = req.emplace(cc, out);
      if (!fresh && it->second != out) return {SearchOutcome::kNone, std::nullopt};
    }
  }

  TermWitness w;
  if (coord.empty()) {  // unconstrained: the first projection qualifies
    w.outcome = SearchOutcome::kFound;
    w.term = Term::variable(0);
    return w;
  }
  const std::size_t width = coord.size();
  std::vector<std::vector<std::uint8_t>> gens(static_cast<std::size_t>(c.arity),
                                              std::vector<std::uint8_t>(width));
  for (const auto& [tuple, idx] : coord) {
    for (int j = 0; j < c.arity; ++j) {
      gens[static_cast<std::size_t>(j)][static_cast<std::size_t>(idx)] =
          static_cast<std::uint8_t>(tuple[static_cast<std::size_t>(j)]);
    }
  }
  auto match = [&](const std::vector<std::uint8_t>& v) {
    for (auto [cc, out] : fixed) {
      if (v[static_cast<std::size_t>(cc)] != out) return false;
    }
    for (auto [c1, c2] : equal) {
      if (v[static_cast<std::size_t>(c1)] != v[static_cast<std::size_t>(c2)]) return false;
    }
    return true;
  };
  SubpowerClosure cl = close_subpower(a, gens, budget, match);
  switch (cl.outcome) {
    case SubpowerClosure::Outcome::kMatched: {
      w.outcome = SearchOutcome::kFound;
      w.term = reconstruct_term(cl, cl.match);
      if (!verify_term(a, *w.term, c)) {
        throw std::runtime_error("internal: reconstructed term fails its constraints");
      }
      return w;
    }
    case SubpowerClosure::Outcome::kCompleted:
      w.outcome = SearchOutcome::kNone;
      return w;
    case SubpowerClosure::Outcome::kBudgetExhausted:
      w.outcome = SearchOutcome::kResourceExhausted;
      return w;
  }
  return w;
}

bool verify_term(const FiniteAlgebra& a, const Term& t, const TermConstraintSystem& c) {
  if (term_max_var(t) >= c.arity) {
    throw std::runtime_error("term uses variables beyond the constraint arity");
  }
  for (const auto& [row, out] : c.fixed_rows) {
    if (eval_term(a, t, row) != out) return false;
  }
  for (const auto& [u, v] : c.equal_row_pairs) {
    if (eval_term(a, t, u) != eval_term(a, t, v)) return false;
  }
  return true;
}

namespace {

void add_wdt_rows(TermConstraintSystem& sys, int a, int b) {
  sys.fixed_rows.push_back({{a, a, b}, b});
  sys.fixed_rows.push_back({{b, a, a}, b});
}

}  // namespace

TermWitness find_weak_difference_term(const FiniteAlgebra& a, const Limits& limits) {
  TermConstraintSystem sys;
  sys.arity = 3;
  CongruenceLattice l(a, limits);
  BinaryRelation covered(a.size());
  for (const Congruence& c : l.congruences()) {
    if (!is_abelian(a, c, limits)) continue;
    for (int x = 0; x < a.size(); ++x) {
      for (int y = 0; y < a.size(); ++y) {
        if (c.related(x, y) && !covered.test(x, y)) {
          covered.set(x, y);
          add_wdt_rows(sys, x, y);
        }
      }
    }
  }
  return solve_term_existence(a, sys, limits.closure_budget);
}

TermWitness find_tolerance_wdt(const FiniteAlgebra& a, const Limits& limits) {
  TermConstraintSystem sys;
  sys.arity = 3;
  BinaryRelation covered(a.size());
  for (const Tolerance& t : enumerate_tolerances(a, limits)) {
    if (!is_abelian(a, t, limits)) continue;
    for (int x = 0; x < a.size(); ++x) {
      for (int y = 0; y < a.size(); ++y) {
        if (t.test(x, y) && !covered.test(x, y)) {
          covered.set(x, y);
          add_wdt_rows(sys, x, y);
        }
      }
    }
  }
  return solve_term_existence(a, sys, limits.closure_budget);
}

TermConstraintSystem maltsev_constraints(const FiniteAlgebra& a) {
  TermConstraintSystem sys;
  sys.arity = 3;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      sys.fixed_rows.push_back({{x, y, y}, x});
      sys.fixed_rows.push_back({{y, y, x}, x});
    }
  }
  return sys;
}

TermConstraintSystem siggers_constraints(const FiniteAlgebra& a) {
  TermConstraintSystem sys;
  sys.arity = 4;
  for (int x = 0; x < a.size(); ++x) sys.fixed_rows.push_back({{x, x, x, x}, x});
  for (int p = 0; p < a.size(); ++p) {
    for (int r = 0; r < a.size(); ++r) {
      for (int e = 0; e < a.size(); ++e) {
        sys.equal_row_pairs.push_back({{p, r, e, p}, {r, p, r, e}});
      }
    }
  }
  return sys;
}

TermWitness has_taylor_term(const FiniteAlgebra& a, const Limits& limits) {
  return solve_term_existence(a, siggers_constraints(a), limits.closure_budget);
}

}  // namespace ualg
