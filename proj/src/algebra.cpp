#include "ualg/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace ualg {

namespace {

std::size_t pow_checked(std::size_t base, int exp, std::size_t limit, const char* what) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) {
      throw ResourceExhausted(std::string(what) + ": size exceeds configured bound");
    }
    r *= base;
  }
  return r;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, int size, std::vector<Operation> ops)
    : name_(std::move(name)), n_(size), ops_(std::move(ops)) {
  if (n_ < 1) throw std::runtime_error("algebra size must be >= 1, got " + std::to_string(n_));
  for (const auto& op : ops_) {
    if (op.arity < 0) {
      throw std::runtime_error("operation '" + op.symbol + "': negative arity");
    }
    std::size_t expect = 1;
    for (int i = 0; i < op.arity; ++i) expect *= static_cast<std::size_t>(n_);
    if (op.table.size() != expect) {
      throw std::runtime_error("operation '" + op.symbol + "': table length " +
                               std::to_string(op.table.size()) + " != " + std::to_string(n_) +
                               "^" + std::to_string(op.arity));
    }
    for (std::size_t i = 0; i < op.table.size(); ++i) {
      if (op.table[i] < 0 || op.table[i] >= n_) {
        throw std::runtime_error("operation '" + op.symbol + "': entry " +
                                 std::to_string(op.table[i]) + " at index " + std::to_string(i) +
                                 " out of range [0," + std::to_string(n_ - 1) + "]");
      }
    }
  }
}

std::size_t FiniteAlgebra::row_index(int op_index, std::span<const int> args) const {
  const Operation& op = ops_[static_cast<std::size_t>(op_index)];
  if (static_cast<int>(args.size()) != op.arity) {
    throw std::runtime_error("operation '" + op.symbol + "': expected " +
                             std::to_string(op.arity) + " arguments, got " +
                             std::to_string(args.size()));
  }
  std::size_t idx = 0;
  for (int v : args) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  return idx;
}

int FiniteAlgebra::apply(int op_index, std::span<const int> args) const {
  return ops_[static_cast<std::size_t>(op_index)].table[row_index(op_index, args)];
}

bool FiniteAlgebra::all_unary() const {
  return std::all_of(ops_.begin(), ops_.end(), [](const Operation& o) { return o.arity == 1; });
}

int eval_term(const FiniteAlgebra& a, const Term& t, std::span<const int> env) {
  if (t.var >= 0) {
    if (t.var >= static_cast<int>(env.size())) {
      throw std::runtime_error("term variable x" + std::to_string(t.var) +
                               " has no value in an environment of size " +
                               std::to_string(env.size()));
    }
    return env[static_cast<std::size_t>(t.var)];
  }
  std::vector<int> vals;
  vals.reserve(t.children.size());
  for (const Term& c : t.children) vals.push_back(eval_term(a, c, env));
  return a.apply(t.op, vals);
}

std::string term_to_string(const FiniteAlgebra& a, const Term& t) {
  if (t.var >= 0) return "x" + std::to_string(t.var);
  std::string s = a.operation(t.op).symbol;
  if (t.children.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ", ";
    s += term_to_string(a, t.children[i]);
  }
  s += ")";
  return s;
}

int term_max_var(const Term& t) {
  int m = t.var;
  for (const Term& c : t.children) m = std::max(m, term_max_var(c));
  return m;
}

std::vector<int> decode_tuple(int element, int base, int width) {
  std::vector<int> t(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) {
    t[static_cast<std::size_t>(i)] = element % base;
    element /= base;
  }
  return t;
}

int encode_tuple(std::span<const int> tuple, int base) {
  int e = 0;
  for (std::size_t i = tuple.size(); i-- > 0;) e = e * base + tuple[i];
  return e;
}

FiniteAlgebra power(const FiniteAlgebra& a, int k, const Limits& limits) {
  if (k < 1) throw std::runtime_error("power exponent must be >= 1");
  const int n = a.size();
  std::size_t big = pow_checked(static_cast<std::size_t>(n), k, limits.table_budget, "power");
  const int bign = static_cast<int>(big);
  std::vector<Operation> ops;
  for (const Operation& op : a.operations()) {
    std::size_t rows = pow_checked(big, op.arity, limits.table_budget, "power table");
    Operation pop{op.symbol, op.arity, std::vector<int>(rows)};
    std::vector<int> args(static_cast<std::size_t>(op.arity), 0);
    std::vector<int> coord(static_cast<std::size_t>(op.arity));
    for (std::size_t row = 0; row < rows; ++row) {
      // decode row into arguments, last fastest
      std::size_t rem = row;
      for (int i = op.arity - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(i)] = static_cast<int>(rem % big);
        rem /= big;
      }
      std::vector<int> out(static_cast<std::size_t>(k));
      for (int c = 0; c < k; ++c) {
        for (int i = 0; i < op.arity; ++i) {
          int e = args[static_cast<std::size_t>(i)];
          for (int j = 0; j < c; ++j) e /= n;
          coord[static_cast<std::size_t>(i)] = e % n;
        }
        out[static_cast<std::size_t>(c)] = a.apply(
            static_cast<int>(&op - a.operations().data()), coord);
      }
      pop.table[row] = encode_tuple(out, n);
    }
    ops.push_back(std::move(pop));
  }
  return FiniteAlgebra(a.name() + "^" + std::to_string(k), bign, std::move(ops));
}

FiniteAlgebra algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed algebra document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j.contains("ops")) {
    throw std::runtime_error("malformed algebra document: need fields 'size' and 'ops'");
  }
  std::string name = j.value("name", "unnamed");
  int size = j.at("size").get<int>();
  std::vector<Operation> ops;
  for (const auto& jop : j.at("ops")) {
    Operation op;
    op.symbol = jop.at("symbol").get<std::string>();
    op.arity = jop.at("arity").get<int>();
    op.table = jop.at("table").get<std::vector<int>>();
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra(std::move(name), size, std::move(ops));
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str());
}

std::string algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::json j;
  j["name"] = a.name();
  j["size"] = a.size();
  j["ops"] = nlohmann::json::array();
  for (const Operation& op : a.operations()) {
    j["ops"].push_back({{"symbol", op.symbol}, {"arity", op.arity}, {"table", op.table}});
  }
  return j.dump(2);
}

std::vector<int> subuniverse(const FiniteAlgebra& a, const std::vector<int>& generators) {
  std::vector<bool> in(static_cast<std::size_t>(a.size()), false);
  std::vector<int> elems;
  auto add = [&](int e) {
    if (!in[static_cast<std::size_t>(e)]) {
      in[static_cast<std::size_t>(e)] = true;
      elems.push_back(e);
    }
  };
  for (int g : generators) {
    if (g < 0 || g >= a.size()) {
      throw std::runtime_error("generator " + std::to_string(g) + " out of range");
    }
    add(g);
  }
  // nullary operations are always members
  for (int o = 0; o < a.num_operations(); ++o) {
    if (a.operation(o).arity == 0) add(a.operation(o).table[0]);
  }
  std::size_t done = 0;
  while (done < elems.size()) {
    // rescan all tuples touching undone elements; sets here are tiny
    done = elems.size();
    for (int o = 0; o < a.num_operations(); ++o) {
      const Operation& op = a.operation(o);
      if (op.arity == 0) continue;
      std::vector<std::size_t> pick(static_cast<std::size_t>(op.arity), 0);
      std::vector<int> args(static_cast<std::size_t>(op.arity));
      while (true) {
        for (int i = 0; i < op.arity; ++i) args[static_cast<std::size_t>(i)] = elems[pick[static_cast<std::size_t>(i)]];
        add(a.apply(o, args));
        int i = op.arity - 1;
        for (; i >= 0; --i) {
          if (++pick[static_cast<std::size_t>(i)] < done) break;
          pick[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

SubAlgebra induced_subalgebra(const FiniteAlgebra& a, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> idx(static_cast<std::size_t>(a.size()), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) idx[static_cast<std::size_t>(elements[i])] = static_cast<int>(i);
  const int m = static_cast<int>(elements.size());
  std::vector<Operation> ops;
  for (int o = 0; o < a.num_operations(); ++o) {
    const Operation& op = a.operation(o);
    std::size_t rows = 1;
    for (int i = 0; i < op.arity; ++i) rows *= static_cast<std::size_t>(m);
    Operation sop{op.symbol, op.arity, std::vector<int>(rows)};
    std::vector<int> args(static_cast<std::size_t>(op.arity));
    for (std::size_t row = 0; row < rows; ++row) {
      std::size_t rem = row;
      for (int i = op.arity - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(i)] = elements[rem % static_cast<std::size_t>(m)];
        rem /= static_cast<std::size_t>(m);
      }
      int out = a.apply(o, args);
      if (idx[static_cast<std::size_t>(out)] < 0) {
        throw std::runtime_error("element set is not a subuniverse: '" + op.symbol +
                                 "' escapes at element " + std::to_string(out));
      }
      sop.table[row] = idx[static_cast<std::size_t>(out)];
    }
    ops.push_back(std::move(sop));
  }
  return SubAlgebra{FiniteAlgebra(a.name() + "|sub", m, std::move(ops)), std::move(elements)};
}

}  // namespace ualg
