#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "causal_implicits.hpp"

namespace ci_test {

using namespace causal_implicits;

inline std::string data_path(const std::string& name) { return std::string(CI_DATA_DIR) + "/" + name; }

inline CausalGraph load_graph(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

inline CausalGraph common_cause() { return load_graph("common_cause.graph"); }
inline CausalGraph confounded_chain() { return load_graph("confounded_chain.graph"); }

/// p^t_v written with one digit per observed variable, e.g. pv(g, "121").
inline ParamId pv(const CausalGraph& g, const std::string& digits, const Assignment& t = {}) {
  NameList obs = g.observed();
  std::vector<Assignment::Entry> e;
  for (std::size_t k = 0; k < obs.size(); ++k) e.emplace_back(obs[k], digits[k] - '0');
  return joint_param(t, g.make_assignment(std::move(e)));
}

inline Polynomial P(const ParamId& p) { return Polynomial(p); }

inline Assignment at(const CausalGraph& g, std::vector<Assignment::Entry> e) {
  return g.make_assignment(std::move(e));
}

/// Random semi-Markovian graph: observed V1..Vn declared sink-last, edges
/// from earlier to later declarations, at most `max_hidden` hidden variables
/// with two observed children each.
inline CausalGraph random_graph(std::uint64_t seed, int min_n, int max_n, int max_hidden,
                                int max_ternary) {
  std::mt19937_64 rng(seed);
  int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
  std::vector<Variable> vars;
  int ternary = 0;
  for (int i = 0; i < n; ++i) {
    int card = 2;
    if (ternary < max_ternary && rng() % 3 == 0) {
      card = 3;
      ++ternary;
    }
    vars.push_back({"V" + std::to_string(i + 1), card, VariableKind::observed});
  }
  std::vector<CausalGraph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 5 < 2) edges.emplace_back(vars[i].name, vars[j].name);
  int hidden = max_hidden > 0 ? static_cast<int>(rng() % static_cast<std::uint64_t>(max_hidden + 1)) : 0;
  for (int h = 0; h < hidden; ++h) {
    std::string name = "U" + std::to_string(h + 1);
    vars.push_back({name, 2, VariableKind::hidden});
    int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    if (b >= a) ++b;
    edges.emplace_back(name, "V" + std::to_string(a + 1));
    edges.emplace_back(name, "V" + std::to_string(b + 1));
  }
  return CausalGraph(std::move(vars), std::move(edges));
}

/// c-components by explicit path search: x and y share a block iff a
/// sequence of observed vertices links them, consecutive ones sharing a
/// hidden parent.
inline std::vector<std::set<std::string>> brute_force_c_components(const CausalGraph& g) {
  NameList obs = g.observed();
  auto linked = [&](const std::string& x, const std::string& y) {
    for (const auto& u : g.hidden_parents(x)) {
      NameList hy = g.hidden_parents(y);
      if (std::find(hy.begin(), hy.end(), u) != hy.end()) return true;
    }
    return false;
  };
  std::vector<std::set<std::string>> blocks;
  std::set<std::string> placed;
  for (const auto& start : obs) {
    if (placed.count(start)) continue;
    std::set<std::string> block{start};
    std::vector<std::string> frontier{start};
    while (!frontier.empty()) {
      std::string x = frontier.back();
      frontier.pop_back();
      for (const auto& y : obs)
        if (!block.count(y) && linked(x, y)) {
          block.insert(y);
          frontier.push_back(y);
        }
    }
    placed.insert(block.begin(), block.end());
    blocks.push_back(block);
  }
  return blocks;
}

/// Every observed ancestor of `a` by repeated parent expansion.
inline std::set<std::string> ancestor_closure(const CausalGraph& g, const NameList& a) {
  std::set<std::string> s(a.begin(), a.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& x : std::vector<std::string>(s.begin(), s.end()))
      for (const auto& p : g.parents(x))
        if (s.insert(p).second) grew = true;
  }
  return s;
}

/// All generators of `c` vanish on the exact tables of `points` random
/// models; returns the number of nonzero evaluations.
inline std::size_t soundness_failures(const CausalGraph& g, const ConstraintSet& c, int points,
                                      std::uint64_t seed0) {
  std::size_t failures = 0;
  for (int k = 0; k < points; ++k) {
    ModelPoint m = random_model(g, seed0 + static_cast<std::uint64_t>(k));
    auto tables = exact_distributions(g, m, c.requests);
    for (const auto& f : c.ideal.generators())
      if (evaluate(f, tables) != 0) ++failures;
  }
  return failures;
}

}  // namespace ci_test
