#include "ualg/subpower.hpp"

#include <string>
#include <unordered_map>

namespace ualg {

SubpowerClosure close_subpower(const FiniteAlgebra& a,
                               const std::vector<std::vector<std::uint8_t>>& generators,
                               std::size_t budget, const MatchFn& match,
                               std::size_t work_budget) {
  SubpowerClosure out;
  if (generators.empty()) throw std::runtime_error("subpower closure needs at least one generator");
  const std::size_t width = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != width) throw std::runtime_error("subpower generators have unequal widths");
  }

  std::unordered_map<std::string, int> seen;
  std::size_t work = 0;

  auto add = [&](const std::vector<std::uint8_t>& v, SubpowerClosure::Node node) -> int {
    std::string key(reinterpret_cast<const char*>(v.data()), v.size());
    auto [it, fresh] = seen.emplace(std::move(key), static_cast<int>(out.vectors.size()));
    if (!fresh) return -1;
    out.vectors.push_back(v);
    out.provenance.push_back(std::move(node));
    if (match && match(v)) {
      out.match = static_cast<int>(out.vectors.size()) - 1;
      out.outcome = SubpowerClosure::Outcome::kMatched;
    }
    return it->second;
  };

  for (std::size_t g = 0; g < generators.size(); ++g) {
    add(generators[g], {-1, {static_cast<int>(g)}});
    if (out.match >= 0) return out;
  }
  // constants contributed by nullary operations
  for (int o = 0; o < a.num_operations(); ++o) {
    if (a.operation(o).arity != 0) continue;
    std::vector<std::uint8_t> v(width, static_cast<std::uint8_t>(a.operation(o).table[0]));
    add(v, {o, {}});
    if (out.match >= 0) return out;
  }

  std::size_t level_start = 0;
  while (level_start < out.vectors.size()) {
    const std::size_t level_end = out.vectors.size();
    for (int o = 0; o < a.num_operations(); ++o) {
      const Operation& op = a.operation(o);
      const int k = op.arity;
      if (k == 0) continue;
      std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
      std::vector<int> argvals(static_cast<std::size_t>(k));
      std::vector<std::uint8_t> v(width);
      while (true) {
        bool touches_level = false;
        for (int i = 0; i < k; ++i) {
          if (pick[static_cast<std::size_t>(i)] >= level_start) { touches_level = true; break; }
        }
        ++work;
        if (touches_level) {
          work += width;
          for (std::size_t c = 0; c < width; ++c) {
            for (int i = 0; i < k; ++i) {
              argvals[static_cast<std::size_t>(i)] =
                  out.vectors[pick[static_cast<std::size_t>(i)]][c];
            }
            v[c] = static_cast<std::uint8_t>(op.table[a.row_index(o, argvals)]);
          }
          add(v, {o, std::vector<int>(pick.begin(), pick.end())});
          if (out.match >= 0) return out;
          if (out.vectors.size() > budget || work > work_budget) {
            out.outcome = SubpowerClosure::Outcome::kBudgetExhausted;
            return out;
          }
        }
        int i = k - 1;
        for (; i >= 0; --i) {
          if (++pick[static_cast<std::size_t>(i)] < level_end) break;
          pick[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
      }
    }
    level_start = level_end;
  }
  out.outcome = (out.match >= 0) ? SubpowerClosure::Outcome::kMatched
                                 : SubpowerClosure::Outcome::kCompleted;
  return out;
}

Term reconstruct_term(const SubpowerClosure& c, int index) {
  const SubpowerClosure::Node& node = c.provenance.at(static_cast<std::size_t>(index));
  if (node.op < 0) return Term::variable(node.args[0]);
  std::vector<Term> children;
  children.reserve(node.args.size());
  for (int arg : node.args) children.push_back(reconstruct_term(c, arg));
  return Term::apply(node.op, std::move(children));
}

}  // namespace ualg
