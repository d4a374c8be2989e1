#pragma once

// Causal graphs over observed and hidden (root-only) variables, and the
// purely graph-theoretic queries used by the kernel and reduction code.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "causal_implicits/errors.hpp"

namespace causal_implicits {

enum class VariableKind { observed, hidden };

struct Variable {
  std::string name;
  int cardinality = 2;
  VariableKind kind = VariableKind::observed;

  bool operator==(const Variable&) const = default;
};

/// Variable names. Every list returned by this header is in the graph's
/// canonical (declaration) order.
using NameList = std::vector<std::string>;

/// Values for a set of variables, kept in the owning graph's canonical order.
/// Values are 1-based, as in the usual p_{111} notation.
class Assignment {
 public:
  using Entry = std::pair<std::string, int>;

  Assignment() = default;
  /// `entries` must already be in canonical order; use
  /// CausalGraph::make_assignment to build from arbitrary input.
  explicit Assignment(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<int> get(std::string_view name) const {
    for (const auto& [n, v] : entries_)
      if (n == name) return v;
    return std::nullopt;
  }
  bool contains(std::string_view name) const { return get(name).has_value(); }

  NameList names() const {
    NameList out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
  }

  /// Entries whose variable is (not) in `names`.
  Assignment restricted_to(const NameList& names) const {
    std::vector<Entry> out;
    for (const auto& e : entries_)
      if (std::find(names.begin(), names.end(), e.first) != names.end()) out.push_back(e);
    return Assignment(std::move(out));
  }
  Assignment without(const NameList& names) const {
    std::vector<Entry> out;
    for (const auto& e : entries_)
      if (std::find(names.begin(), names.end(), e.first) == names.end()) out.push_back(e);
    return Assignment(std::move(out));
  }

  /// True when every variable assigned in both has the same value.
  bool agrees_with(const Assignment& other) const {
    for (const auto& [n, v] : entries_) {
      auto w = other.get(n);
      if (w && *w != v) return false;
    }
    return true;
  }

  /// "V1=1,V2=2"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += entries_[i].first + "=" + std::to_string(entries_[i].second);
    }
    return out;
  }

  auto operator<=>(const Assignment&) const = default;
  bool operator==(const Assignment&) const = default;

 private:
  std::vector<Entry> entries_;
};

using HiddenAssignment = Assignment;

/// a ⊥ b | c.
struct IndependenceStatement {
  std::string a;
  NameList b;
  NameList c;

  bool operator==(const IndependenceStatement&) const = default;
};

class CausalGraph {
 public:
  using Edge = std::pair<std::string, std::string>;

  CausalGraph() = default;

  /// Validates names, cardinalities, edge endpoints, acyclicity and the
  /// semi-Markovian restriction (hidden variables have no parents).
  CausalGraph(std::vector<Variable> variables, std::vector<Edge> edges)
      : vars_(std::move(variables)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.name.empty()) throw StructuralError("empty variable name");
      if (v.cardinality < 2)
        throw StructuralError("variable " + v.name + " has cardinality < 2");
      if (!index_.emplace(v.name, i).second)
        throw StructuralError("duplicate variable name " + v.name);
    }
    parents_.assign(vars_.size(), {});
    children_.assign(vars_.size(), {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto& [p, c] : edges) {
      std::size_t pi = index_of(p), ci = index_of(c);
      if (pi == ci) throw StructuralError("self loop on " + p);
      if (vars_[ci].kind == VariableKind::hidden)
        throw StructuralError("hidden variable " + c + " has parent " + p);
      if (!seen.emplace(pi, ci).second) continue;
      parents_[ci].push_back(pi);
      children_[pi].push_back(ci);
    }
    for (auto& ps : parents_) std::sort(ps.begin(), ps.end());
    for (auto& cs : children_) std::sort(cs.begin(), cs.end());
    for (auto [pi, ci] : seen) edges_.emplace_back(vars_[pi].name, vars_[ci].name);
    std::sort(edges_.begin(), edges_.end(), [this](const Edge& x, const Edge& y) {
      return std::pair(index_.at(x.first), index_.at(x.second)) <
             std::pair(index_.at(y.first), index_.at(y.second));
    });
    compute_topological_order();
  }

  const std::vector<Variable>& variables() const noexcept { return vars_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vars_.size(); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw StructuralError("unknown variable " + std::string(name));
    return *i;
  }
  bool contains(std::string_view name) const { return find(name).has_value(); }
  const Variable& variable(std::string_view name) const { return vars_[index_of(name)]; }
  int cardinality(std::string_view name) const { return variable(name).cardinality; }
  bool is_observed(std::string_view name) const {
    return variable(name).kind == VariableKind::observed;
  }
  bool is_hidden(std::string_view name) const { return !is_observed(name); }

  NameList observed() const { return names_of_kind(VariableKind::observed); }
  NameList hidden() const { return names_of_kind(VariableKind::hidden); }
  bool has_hidden() const {
    return std::any_of(vars_.begin(), vars_.end(),
                       [](const Variable& v) { return v.kind == VariableKind::hidden; });
  }

  /// Observed parents of `name`.
  NameList parents(std::string_view name) const {
    return filter(parents_[index_of(name)], VariableKind::observed);
  }
  /// Hidden parents U^i of `name`.
  NameList hidden_parents(std::string_view name) const {
    return filter(parents_[index_of(name)], VariableKind::hidden);
  }
  NameList children(std::string_view name) const {
    NameList out;
    for (auto c : children_[index_of(name)]) out.push_back(vars_[c].name);
    return out;
  }

  const std::vector<std::size_t>& parent_indices(std::size_t i) const { return parents_[i]; }
  const std::vector<std::size_t>& child_indices(std::size_t i) const { return children_[i]; }
  /// Source-to-sink, ties broken by declaration order.
  const std::vector<std::size_t>& topological_indices() const noexcept { return topo_; }

  /// Sorts into canonical order, drops duplicates, and checks every name.
  NameList canonical(NameList names) const {
    for (const auto& n : names) index_of(n);
    std::sort(names.begin(), names.end(), [this](const std::string& a, const std::string& b) {
      return index_.at(a) < index_.at(b);
    });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
  }

  /// Builds an assignment over observed variables, validating names and ranges.
  Assignment make_assignment(std::vector<Assignment::Entry> entries) const {
    return build_assignment(std::move(entries), VariableKind::observed);
  }
  HiddenAssignment make_hidden_assignment(std::vector<Assignment::Entry> entries) const {
    return build_assignment(std::move(entries), VariableKind::hidden);
  }

  bool operator==(const CausalGraph& o) const { return vars_ == o.vars_ && edges_ == o.edges_; }

 private:
  NameList names_of_kind(VariableKind kind) const {
    NameList out;
    for (const auto& v : vars_)
      if (v.kind == kind) out.push_back(v.name);
    return out;
  }
  NameList filter(const std::vector<std::size_t>& idx, VariableKind kind) const {
    NameList out;
    for (auto i : idx)
      if (vars_[i].kind == kind) out.push_back(vars_[i].name);
    return out;
  }

  Assignment build_assignment(std::vector<Assignment::Entry> entries, VariableKind kind) const {
    for (const auto& [n, v] : entries) {
      const Variable& var = variable(n);
      if (var.kind != kind)
        throw StructuralError("variable " + n + (kind == VariableKind::observed
                                                     ? " is hidden; expected observed"
                                                     : " is observed; expected hidden"));
      if (v < 1 || v > var.cardinality)
        throw StructuralError("value " + std::to_string(v) + " out of range for " + n);
    }
    std::sort(entries.begin(), entries.end(), [this](const auto& a, const auto& b) {
      return index_.at(a.first) < index_.at(b.first);
    });
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i].first == entries[i - 1].first)
        throw StructuralError("variable " + entries[i].first + " assigned twice");
    return Assignment(std::move(entries));
  }

  void compute_topological_order() {
    std::vector<std::size_t> indegree(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) indegree[i] = parents_[i].size();
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (indegree[i] == 0) ready.insert(i);
    while (!ready.empty()) {
      std::size_t i = *ready.begin();
      ready.erase(ready.begin());
      topo_.push_back(i);
      for (auto c : children_[i])
        if (--indegree[c] == 0) ready.insert(c);
    }
    if (topo_.size() != vars_.size()) {
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (indegree[i] != 0) throw StructuralError("cycle through variable " + vars_[i].name);
    }
  }

  std::vector<Variable> vars_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> topo_;
};

// ---------------------------------------------------------------------------
// Enumeration helpers

/// Every joint value of `names` (canonical order), first variable most
/// significant, values counting from 1.
inline std::vector<Assignment> all_assignments(const CausalGraph& g, const NameList& names) {
  NameList ordered = g.canonical(names);
  std::vector<int> card;
  for (const auto& n : ordered) card.push_back(g.cardinality(n));
  std::vector<Assignment> out;
  std::vector<int> digits(ordered.size(), 1);
  while (true) {
    std::vector<Assignment::Entry> e;
    e.reserve(ordered.size());
    for (std::size_t k = 0; k < ordered.size(); ++k) e.emplace_back(ordered[k], digits[k]);
    out.emplace_back(std::move(e));
    std::size_t k = ordered.size();
    while (k > 0) {
      --k;
      if (++digits[k] <= card[k]) break;
      digits[k] = 1;
      if (k == 0) return out;
    }
    if (ordered.empty()) return out;
  }
}

/// Union of two agreeing assignments, in the canonical order of `g`.
inline Assignment merge(const CausalGraph& g, const Assignment& a, const Assignment& b) {
  std::vector<Assignment::Entry> e = a.entries();
  for (const auto& x : b.entries()) {
    auto have = a.get(x.first);
    if (have) {
      if (*have != x.second)
        throw PreconditionError("conflicting values for " + x.first + " while merging");
      continue;
    }
    e.push_back(x);
  }
  std::sort(e.begin(), e.end(), [&g](const auto& x, const auto& y) {
    return g.index_of(x.first) < g.index_of(y.first);
  });
  return Assignment(std::move(e));
}

inline NameList set_difference(const CausalGraph& g, const NameList& a, const NameList& b) {
  NameList out;
  for (const auto& n : g.canonical(a))
    if (std::find(b.begin(), b.end(), n) == b.end()) out.push_back(n);
  return out;
}

inline NameList set_union(const CausalGraph& g, NameList a, const NameList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return g.canonical(std::move(a));
}

// ---------------------------------------------------------------------------
// Graph queries

/// All variables, source to sink; ties broken by declaration order.
inline NameList topological_order(const CausalGraph& g) {
  NameList out;
  for (auto i : g.topological_indices()) out.push_back(g.variables()[i].name);
  return out;
}

/// Observed variables ordered sink first (V_1 > ... > V_n with V_1 a sink):
/// repeatedly peel the earliest-declared vertex that has no remaining child.
inline NameList sink_first_order(const CausalGraph& g, const NameList& subset) {
  NameList members = g.canonical(subset);
  std::vector<bool> in(g.size(), false);
  for (const auto& n : members) in[g.index_of(n)] = true;
  std::vector<std::size_t> remaining_children(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!in[i]) continue;
    for (auto c : g.child_indices(i))
      if (in[c]) ++remaining_children[i];
  }
  NameList out;
  std::vector<bool> done(g.size(), false);
  for (std::size_t step = 0; step < members.size(); ++step) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!in[i] || done[i] || remaining_children[i] != 0) continue;
      done[i] = true;
      out.push_back(g.variables()[i].name);
      for (auto p : g.parent_indices(i))
        if (in[p]) --remaining_children[p];
      break;
    }
  }
  return out;
}

/// Observed ancestors of the given vertices, excluding the vertices themselves
/// unless one is an ancestor of another.
inline NameList observed_ancestors(const CausalGraph& g, const NameList& of) {
  std::vector<bool> mark(g.size(), false);
  std::vector<std::size_t> stack;
  for (const auto& n : of) stack.push_back(g.index_of(n));
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (auto p : g.parent_indices(i)) {
      if (g.variables()[p].kind != VariableKind::observed || mark[p]) continue;
      mark[p] = true;
      stack.push_back(p);
    }
  }
  NameList out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (mark[i]) out.push_back(g.variables()[i].name);
  return out;
}

inline NameList observed_descendants(const CausalGraph& g, std::string_view of) {
  std::vector<bool> mark(g.size(), false);
  std::vector<std::size_t> stack{g.index_of(of)};
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (auto c : g.child_indices(i)) {
      if (mark[c]) continue;
      mark[c] = true;
      stack.push_back(c);
    }
  }
  NameList out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (mark[i] && g.variables()[i].kind == VariableKind::observed)
      out.push_back(g.variables()[i].name);
  return out;
}

/// G(C): the observed vertices in `keep`, every hidden variable with at least
/// one child in `keep`, and the edges among them.
inline CausalGraph induced_subgraph(const CausalGraph& g, const NameList& keep) {
  NameList kept = g.canonical(keep);
  for (const auto& n : kept)
    if (!g.is_observed(n)) throw PreconditionError("induced_subgraph: " + n + " is hidden");
  std::vector<bool> in(g.size(), false);
  for (const auto& n : kept) in[g.index_of(n)] = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.variables()[i].kind != VariableKind::hidden) continue;
    for (auto c : g.child_indices(i))
      if (in[c] && g.variables()[c].kind == VariableKind::observed) in[i] = true;
  }
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (in[i]) vars.push_back(g.variables()[i]);
  std::vector<CausalGraph::Edge> edges;
  for (const auto& e : g.edges())
    if (in[g.index_of(e.first)] && in[g.index_of(e.second)]) edges.push_back(e);
  return CausalGraph(std::move(vars), std::move(edges));
}

/// Partition of the observed vertices into c-components. Blocks are ordered
/// by their earliest-declared member.
inline std::vector<NameList> c_components(const CausalGraph& g) {
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.variables()[u].kind != VariableKind::hidden) continue;
    const auto& ch = g.child_indices(u);
    for (std::size_t k = 1; k < ch.size(); ++k) {
      std::size_t a = root(ch[0]), b = root(ch[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, NameList> blocks;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.variables()[i].kind == VariableKind::observed)
      blocks[root(i)].push_back(g.variables()[i].name);
  std::vector<NameList> out;
  for (auto& [r, b] : blocks) out.push_back(std::move(b));
  std::sort(out.begin(), out.end(), [&g](const NameList& x, const NameList& y) {
    return g.index_of(x.front()) < g.index_of(y.front());
  });
  return out;
}

/// True iff `a` contains all of its observed ancestors.
inline bool is_ancestral(const CausalGraph& g, const NameList& a) {
  for (const auto& n : a)
    if (!g.is_observed(n)) throw PreconditionError("is_ancestral: " + n + " is hidden");
  for (const auto& anc : observed_ancestors(g, a))
    if (std::find(a.begin(), a.end(), anc) == a.end()) return false;
  return true;
}

/// One statement V ⊥ ND(V)\PA(V) | PA(V) per vertex whose independent set is
/// nonempty. Requires a fully observed graph.
inline std::vector<IndependenceStatement> local_markov(const CausalGraph& g) {
  if (g.has_hidden()) throw PreconditionError("local_markov requires a fully observed graph");
  std::vector<IndependenceStatement> out;
  for (const auto& v : g.observed()) {
    NameList desc = observed_descendants(g, v);
    NameList pa = g.parents(v);
    NameList b;
    for (const auto& w : g.observed()) {
      if (w == v) continue;
      if (std::find(desc.begin(), desc.end(), w) != desc.end()) continue;
      if (std::find(pa.begin(), pa.end(), w) != pa.end()) continue;
      b.push_back(w);
    }
    if (b.empty()) continue;
    out.push_back({v, std::move(b), std::move(pa)});
  }
  return out;
}

/// V_cons: vertices outside T whose own value and parent values in `v` agree
/// with `t`.
inline NameList consistent_set(const CausalGraph& g, const Assignment& v, const Assignment& t) {
  NameList out;
  for (const auto& n : g.observed()) {
    if (t.contains(n)) continue;
    bool ok = true;
    auto own = t.get(n);
    if (own && v.get(n) != own) ok = false;
    for (const auto& p : g.parents(n)) {
      auto tp = t.get(p);
      if (tp && v.get(p) != tp) ok = false;
    }
    if (ok) out.push_back(n);
  }
  return out;
}

/// cons(v, t): `v` with every variable of T overwritten by its value in `t`.
inline Assignment cons(const CausalGraph& g, const Assignment& v, const Assignment& t) {
  std::vector<Assignment::Entry> e;
  for (const auto& n : g.observed()) {
    auto tv = t.get(n);
    auto vv = v.get(n);
    if (tv)
      e.emplace_back(n, *tv);
    else if (vv)
      e.emplace_back(n, *vv);
    else
      throw PreconditionError("cons: assignment does not cover " + n);
  }
  return Assignment(std::move(e));
}

/// W1 (sink side) and W2 (source side) subsets of T giving a topological
/// order W1 > (V\T) > W2, sink first.
struct AntichainSplit {
  NameList w1;
  NameList w2;
  bool operator==(const AntichainSplit&) const = default;
};

/// Requires that no two vertices of V\T are ancestor-related. W2 is chosen
/// minimal: the members of T that are ancestors of some vertex of V\T.
inline AntichainSplit antichain_split(const CausalGraph& g, const NameList& t_vars) {
  NameList t = g.canonical(t_vars);
  NameList rest = set_difference(g, g.observed(), t);
  for (const auto& b : rest) {
    NameList anc = observed_ancestors(g, {b});
    for (const auto& other : rest)
      if (other != b && std::find(anc.begin(), anc.end(), other) != anc.end())
        throw PreconditionError("V\\T is not an antichain: " + other + " is an ancestor of " + b);
  }
  NameList anc = observed_ancestors(g, rest);
  AntichainSplit split;
  for (const auto& n : t) {
    if (std::find(anc.begin(), anc.end(), n) != anc.end())
      split.w2.push_back(n);
    else
      split.w1.push_back(n);
  }
  return split;
}

// ---------------------------------------------------------------------------
// Text format: `obs NAME CARD`, `hidden NAME [CARD]`, `edge PARENT CHILD`,
// '#' starts a comment.

inline CausalGraph parse_graph(std::string_view text) {
  std::vector<Variable> vars;
  std::vector<CausalGraph::Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto valid_name = [](const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
      return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  };
  auto parse_card = [&](const std::string& s) {
    int card = 0;
    try {
      std::size_t used = 0;
      card = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad cardinality '" + s + "'");
    }
    if (card < 2) throw ParseError(lineno, "cardinality must be at least 2");
    return card;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "obs") {
      if (tok.size() != 3) throw ParseError(lineno, "expected: obs NAME CARD");
      if (!valid_name(tok[1])) throw ParseError(lineno, "bad name '" + tok[1] + "'");
      vars.push_back({tok[1], parse_card(tok[2]), VariableKind::observed});
    } else if (kw == "hidden") {
      if (tok.size() != 2 && tok.size() != 3)
        throw ParseError(lineno, "expected: hidden NAME [CARD]");
      if (!valid_name(tok[1])) throw ParseError(lineno, "bad name '" + tok[1] + "'");
      int card = tok.size() == 3 ? parse_card(tok[2]) : 2;
      vars.push_back({tok[1], card, VariableKind::hidden});
    } else if (kw == "edge") {
      if (tok.size() != 3) throw ParseError(lineno, "expected: edge PARENT CHILD");
      edges.emplace_back(tok[1], tok[2]);
      edge_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  // Re-validate incrementally so structural errors carry a line number.
  std::set<std::string> names;
  for (const auto& v : vars)
    if (!names.insert(v.name).second) throw StructuralError("duplicate variable name " + v.name);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& [p, c] = edges[k];
    if (!names.count(p)) throw ParseError(edge_lines[k], "unknown variable " + p);
    if (!names.count(c)) throw ParseError(edge_lines[k], "unknown variable " + c);
  }
  if (std::none_of(vars.begin(), vars.end(),
                   [](const Variable& v) { return v.kind == VariableKind::observed; }))
    throw ParseError(lineno, "graph declares no observed variables");
  return CausalGraph(std::move(vars), std::move(edges));
}

inline std::string graph_to_text(const CausalGraph& g) {
  std::string out;
  for (const auto& v : g.variables()) {
    if (v.kind == VariableKind::observed)
      out += "obs " + v.name + " " + std::to_string(v.cardinality) + "\n";
    else
      out += "hidden " + v.name + " " + std::to_string(v.cardinality) + "\n";
  }
  for (const auto& [p, c] : g.edges()) out += "edge " + p + " " + c + "\n";
  return out;
}

/// FNV-1a 64 of the canonical text, as 16 hex digits.
inline std::string graph_digest(const CausalGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : graph_to_text(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace causal_implicits
