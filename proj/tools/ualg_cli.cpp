// Command-line front end: load algebra documents, run analyses, emit text,
// JSON and DOT reports, and drive the randomized / exhaustive harnesses.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ualg/corpus.hpp"

using nlohmann::json;
using namespace ualg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw std::runtime_error("cannot parse pair list '" + text + "': expected e.g. [[0,1],[1,2]]");
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw std::runtime_error("bad pair token '" + p.dump() + "' in '" + text + "'");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

Congruence parse_blocks(const std::string& text, int n) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw std::runtime_error("cannot parse block list '" + text + "': expected e.g. [[0,2],[1,3]]");
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw std::runtime_error("bad block token '" + b.dump() + "'");
    blocks.push_back(b.get<std::vector<int>>());
  }
  return Congruence::from_blocks(n, blocks);
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [x, y] : pairs) out.push_back({x, y});
  return out;
}

struct Emit {
  std::string format = "text";  // text | json | dot
  json report;

  void finish() const {
    if (format == "json") std::cout << report.dump(2) << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite universal algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format: text | json | dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  Limits limits;
  app.add_option("--budget", limits.closure_budget, "closure size budget");
  app.add_option("--enum-max", limits.tolerance_enum_max, "max universe size for tolerance scans");

  std::string alg_path, alpha_s, beta_s, s_s, t_s, delta_s, mode_s = "fig8", kind_s, prop_s,
                        target_s = "err219", dot_path;
  int rand_n = 200, max_size = 4, max_ops = 2, instances = 10;
  std::uint64_t seed = 1;

  auto* con = app.add_subcommand("con", "congruence lattice report");
  con->add_option("alg", alg_path)->required();
  con->add_option("--dot", dot_path, "write a DOT Hasse diagram to this file");

  auto* comm = app.add_subcommand("comm", "commutator of two congruences");
  comm->add_option("alg", alg_path)->required();
  comm->add_option("--alpha", alpha_s, "blocks, e.g. [[0,2],[1,3]]")->required();
  comm->add_option("--beta", beta_s, "blocks")->required();

  auto* cent = app.add_subcommand("cent", "centralizer verdict C(S,T;delta)");
  cent->add_option("alg", alg_path)->required();
  cent->add_option("--S", s_s, "generating pairs, e.g. [[0,1]]")->required();
  cent->add_option("--T", t_s, "generating pairs")->required();
  cent->add_option("--delta", delta_s, "blocks")->required();

  auto* tol = app.add_subcommand("tol", "tolerance census");
  tol->add_option("alg", alg_path)->required();

  auto* pent = app.add_subcommand("pentagons", "labeled pentagons with side conditions");
  pent->add_option("alg", alg_path)->required();
  pent->add_option("--mode", mode_s, "fig8 | fig9")->check(CLI::IsMember({"fig8", "fig9"}));

  auto* terms = app.add_subcommand("terms", "term search");
  terms->add_option("alg", alg_path)->required();
  terms->add_option("--kind", kind_s, "wdt | twdt | maltsev | taylor")
      ->required()
      ->check(CLI::IsMember({"wdt", "twdt", "maltsev", "taylor"}));

  auto* check = app.add_subcommand("check", "property verdict");
  check->add_option("alg", alg_path)->required();
  check->add_option("--property", prop_s, "A | B | C")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C"}));

  auto* suite = app.add_subcommand("suite", "centralizer contract + consistency over a random corpus");
  suite->add_option("--random", rand_n, "corpus size");
  suite->add_option("--seed", seed, "corpus seed");
  suite->add_option("--max-size", max_size, "max universe size");
  suite->add_option("--instances", instances, "instances per algebra");
  bool with_consistency = false;
  suite->add_flag("--consistency", with_consistency, "also run theorem-consistency checks");

  auto* hunt_cmd = app.add_subcommand("hunt", "exhaustive small-algebra witness search");
  hunt_cmd->add_option("--target", target_s, "err219 | fig8 | fig9")
      ->check(CLI::IsMember({"err219", "fig8", "fig9"}));
  hunt_cmd->add_option("--max-size", max_size, "max universe size");
  hunt_cmd->add_option("--max-ops", max_ops, "max number of unary operations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : kExitUsage;
  }

  Emit emit;
  emit.format = format;
  int exit_code = kExitPass;
  try {
    if (*con) {
      FiniteAlgebra a = load_algebra_file(alg_path);
      CongruenceLattice l(a, limits);
      emit.report = {{"command", "con"}, {"inputs", {{"alg", alg_path}}}};
      json cons = json::array();
      for (int i = 0; i < l.size(); ++i) cons.push_back(l.at(i).block_string());
      emit.report["verdict"] = "ok";
      emit.report["witnesses"] = {{"congruences", cons}};
      emit.report["timings"] = {{"lattice_size", l.size()}};
      std::string dot = con_to_dot(a, l, {}, limits);
      if (!dot_path.empty()) std::ofstream(dot_path) << dot;
      if (format == "dot") {
        std::cout << dot;
      } else if (format == "text") {
        std::cout << "Con(" << a.name() << "): " << l.size() << " congruences\n";
        for (int i = 0; i < l.size(); ++i) std::cout << "  " << l.at(i).block_string() << "\n";
      }
    } else if (*comm) {
      FiniteAlgebra a = load_algebra_file(alg_path);
      Congruence alpha = parse_blocks(alpha_s, a.size());
      Congruence beta = parse_blocks(beta_s, a.size());
      Congruence c = commutator(a, alpha, beta, limits);
      emit.report = {{"command", "comm"},
                     {"inputs", {{"alg", alg_path}, {"alpha", alpha_s}, {"beta", beta_s}}},
                     {"verdict", c.block_string()},
                     {"witnesses", json::array()},
                     {"timings", {{"blocks", c.num_blocks()}}}};
      if (format == "text") std::cout << "[alpha,beta] = " << c.block_string() << "\n";
    } else if (*cent) {
      FiniteAlgebra a = load_algebra_file(alg_path);
      Tolerance s = generate_tolerance(a, parse_pairs(s_s));
      Tolerance t = generate_tolerance(a, parse_pairs(t_s));
      Congruence delta = parse_blocks(delta_s, a.size());
      CentralityCertificate cert = centralizes(a, s, t, delta, limits);
      emit.report = {{"command", "cent"},
                     {"inputs", {{"alg", alg_path}, {"S", s_s}, {"T", t_s}, {"delta", delta_s}}},
                     {"verdict", cert.verdict},
                     {"witnesses", json::array()},
                     {"timings", json::object()}};
      if (!cert.verdict) {
        auto [p, q, r, ss] = *cert.witness;
        emit.report["witnesses"].push_back({{"matrix", {p, q, r, ss}}});
        exit_code = kExitFail;
      }
      if (format == "text") {
        std::cout << "C(S,T;delta) " << (cert.verdict ? "holds" : "fails") << "\n";
        if (cert.witness) {
          auto [p, q, r, ss] = *cert.witness;
          std::cout << "  witness matrix [[" << p << "," << q << "],[" << r << "," << ss << "]]\n";
        }
      }
    } else if (*tol) {
      FiniteAlgebra a = load_algebra_file(alg_path);
      emit.report = {{"command", "tol"},
                     {"inputs", {{"alg", alg_path}}},
                     {"witnesses", json::array()}};
      auto tols = enumerate_tolerances(a, limits);
      for (const Tolerance& t : tols) {
        bool ab = is_abelian(a, t, limits);
        Congruence cg = transitive_closure(a, t);
        emit.report["witnesses"].push_back({{"pairs", pairs_to_json(t.rel().offdiag_pairs())},
                                            {"abelian", ab},
                                            {"transitive", t.rel().is_transitive()},
                                            {"generated_congruence", cg.block_string()}});
        if (format == "text") {
          std::cout << relation_to_string(t.rel()) << (ab ? "  abelian" : "")
                    << (t.rel().is_transitive() ? "  congruence" : "")
                    << "  Cg=" << cg.block_string() << "\n";
        }
      }
      emit.report["verdict"] = "ok";
      emit.report["timings"] = {{"tolerances", tols.size()}};
    } else if (*pent) {
      FiniteAlgebra a = load_algebra_file(alg_path);
      CongruenceLattice l(a, limits);
      PentagonMode mode = (mode_s == "fig8") ? PentagonMode::kFig8 : PentagonMode::kFig9;
      auto ps = find_pentagons(l, mode, a, limits);
      emit.report = {{"command", "pentagons"},
                     {"inputs", {{"alg", alg_path}, {"mode", mode_s}}},
                     {"witnesses", json::array()},
                     {"timings", {{"lattice_size", l.size()}}}};
      for (const LabeledPentagon& p : ps) {
        json jp = {{"bottom", l.at(p.bottom).block_string()},
                   {"beta", l.at(p.beta).block_string()},
                   {"delta", l.at(p.delta).block_string()},
                   {"theta", l.at(p.theta).block_string()},
                   {"alpha", l.at(p.alpha).block_string()}};
        if (p.alpha_commutator_zero) jp["alpha_commutator_zero"] = *p.alpha_commutator_zero;
        if (p.cent_theta_alpha_delta) jp["cent_theta_alpha_delta"] = *p.cent_theta_alpha_delta;
        if (p.cent_beta_beta_beta_delta) {
          jp["cent_beta_beta_beta_delta"] = *p.cent_beta_beta_beta_delta;
        }
        emit.report["witnesses"].push_back(jp);
        if (format == "text") std::cout << jp.dump() << "\n";
      }
      emit.report["verdict"] = ps.empty() ? "none" : "found";
      if (format == "text" && ps.empty()) std::cout << "no pentagons\n";
    } else if (*terms) {
      FiniteAlgebra a = load_algebra_file(alg_path);
      TermWitness w;
      if (kind_s == "wdt") {
        w = find_weak_difference_term(a, limits);
      } else if (kind_s == "twdt") {
        w = find_tolerance_wdt(a, limits);
      } else if (kind_s == "maltsev") {
        w = solve_term_existence(a, maltsev_constraints(a), limits.closure_budget);
      } else {
        w = has_taylor_term(a, limits);
      }
      std::string verdict = (w.outcome == SearchOutcome::kFound)  ? "found"
                            : (w.outcome == SearchOutcome::kNone) ? "none"
                                                                  : "resource-exhausted";
      emit.report = {{"command", "terms"},
                     {"inputs", {{"alg", alg_path}, {"kind", kind_s}}},
                     {"verdict", verdict},
                     {"witnesses", json::array()},
                     {"timings", json::object()}};
      if (w.term) emit.report["witnesses"].push_back({{"term", term_to_string(a, *w.term)}});
      if (format == "text") {
        std::cout << verdict;
        if (w.term) std::cout << ": " << term_to_string(a, *w.term);
        std::cout << "\n";
      }
      if (w.outcome == SearchOutcome::kResourceExhausted) exit_code = kExitResource;
    } else if (*check) {
      FiniteAlgebra a = load_algebra_file(alg_path);
      MDefProperty which = (prop_s == "A")   ? MDefProperty::kAbelianToleranceClosure
                           : (prop_s == "B") ? MDefProperty::kPerspectiveIntervals
                                             : MDefProperty::kForbiddenPentagon;
      PropertyVerdict v = check_property(a, which, limits);
      emit.report = {{"command", "check"},
                     {"inputs", {{"alg", alg_path}, {"property", prop_s}}},
                     {"verdict", v.holds ? "pass" : "fail"},
                     {"witnesses", json::array()},
                     {"timings", json::object()}};
      if (!v.holds) {
        emit.report["witnesses"].push_back(v.witness);
        exit_code = kExitFail;
      }
      if (format == "text") {
        std::cout << "property " << prop_s << ": " << (v.holds ? "pass" : "fail") << "\n";
        if (!v.holds) std::cout << "  " << v.witness << "\n";
      }
    } else if (*suite) {
      auto corpus = make_corpus(rand_n, seed, 2, max_size);
      SuiteResult r = run_tc_suite(corpus, instances, seed, limits);
      emit.report = {{"command", "suite"},
                     {"inputs",
                      {{"random", rand_n}, {"seed", seed}, {"max_size", max_size},
                       {"instances", instances}}},
                     {"verdict", r.failures.empty() ? "pass" : "fail"},
                     {"witnesses", r.failures},
                     {"timings",
                      {{"algebras", r.algebras},
                       {"instances", r.instances},
                       {"applicable_checks", r.applicable_checks}}}};
      if (with_consistency) {
        ConsistencyResult c = run_consistency_checks(corpus, limits);
        for (const auto& f : c.failures) emit.report["witnesses"].push_back(f);
        emit.report["timings"]["wdt_algebras"] = c.wdt_algebras;
        emit.report["timings"]["inconclusive_searches"] = c.inconclusive;
        if (!c.failures.empty()) emit.report["verdict"] = "fail";
      }
      if (emit.report["verdict"] == "fail") exit_code = kExitFail;
      if (format == "text") {
        std::cout << "suite: " << emit.report["verdict"].get<std::string>() << " ("
                  << r.applicable_checks << " applicable checks over " << r.instances
                  << " instances)\n";
        for (const auto& f : emit.report["witnesses"]) std::cout << "  " << f << "\n";
      }
    } else if (*hunt_cmd) {
      HuntResult r = hunt(target_s, max_size, max_ops, limits);
      emit.report = {{"command", "hunt"},
                     {"inputs", {{"target", target_s}, {"max_size", max_size}, {"max_ops", max_ops}}},
                     {"witnesses", json::array()},
                     {"timings", {{"algebras_scanned", r.algebras_scanned}}}};
      for (const auto& w : r.err219) {
        emit.report["witnesses"].push_back({{"algebra", json::parse(w.algebra_json)},
                                            {"delta_pairs", pairs_to_json(w.delta_pairs)},
                                            {"r_pairs", pairs_to_json(w.r_pairs)},
                                            {"double_verified", w.double_verified}});
      }
      for (const auto& h : r.pentagon_hits) emit.report["witnesses"].push_back(h);
      emit.report["verdict"] = emit.report["witnesses"].empty() ? "none" : "found";
      if (format == "text") {
        std::cout << "scanned " << r.algebras_scanned << " algebras, "
                  << emit.report["witnesses"].size() << " witnesses\n";
        for (const auto& w : emit.report["witnesses"]) std::cout << "  " << w << "\n";
      }
    }
  } catch (const ResourceExhausted& e) {
    std::cerr << "resource exhausted: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  emit.finish();
  return exit_code;
}
