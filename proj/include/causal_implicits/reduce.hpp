#pragma once

// Shrinking the implicitization problem with known relations among
// interventional distributions: c-component products and ancestral-set sums.
// The residual families are implicitized separately (grouped so that groups
// share no model parameters) and the relations are added back.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causal_implicits/kernel.hpp"

namespace causal_implicits {

enum class RelationRule { c_component_product, ancestral_sum };

inline std::string to_string(RelationRule r) {
  return r == RelationRule::c_component_product ? "c-component-product" : "ancestral-sum";
}

/// One eliminated family P_t and the families its relation refers to.
struct RelationStep {
  DistributionRequest family;
  RelationRule rule = RelationRule::c_component_product;
  std::vector<DistributionRequest> witnesses;
  bool operator==(const RelationStep&) const = default;
};

struct RelationLedger {
  /// Families left for implicitization, canonical order.
  std::vector<DistributionRequest> residual;
  /// Snapshot between the product and the sum passes.
  std::vector<DistributionRequest> residual_after_products;
  /// Factor families referenced by product relations but absent from the
  /// request.
  std::vector<DistributionRequest> added;
  Ideal relations;
  std::vector<RelationStep> steps;
  /// |J| for the original request.
  std::size_t joint_parameter_count = 0;
};

/// The factor families P_{v\h_i} of P_t at v, one per c-component H_i of
/// G(V\T); empty when G(V\T) is a single c-component.
inline std::vector<DistributionRequest> lemma2_factors(const CausalGraph& g, const Assignment& t,
                                                       const Assignment& v) {
  NameList rest = set_difference(g, g.observed(), t.names());
  std::vector<NameList> h = c_components(induced_subgraph(g, rest));
  if (h.size() < 2) return {};
  std::vector<DistributionRequest> out;
  for (const auto& block : h) out.push_back({v.without(block)});
  return out;
}

/// p^t_v - ∏_i p^{v\h_i}_v for every v consistent with t, or nothing when
/// G(V\T) has a single c-component.
inline std::optional<std::vector<Polynomial>> lemma2_relation(const CausalGraph& g,
                                                              const Assignment& t) {
  NameList rest = set_difference(g, g.observed(), t.names());
  if (c_components(induced_subgraph(g, rest)).size() < 2) return std::nullopt;
  std::vector<Polynomial> out;
  for (const auto& r : all_assignments(g, rest)) {
    Assignment v = merge(g, t, r);
    std::vector<ParamId> factors;
    for (const auto& f : lemma2_factors(g, t, v)) factors.push_back(joint_param(f.t, v));
    out.push_back(Polynomial(joint_param(t, v)) - product_of(factors));
  }
  return out;
}

/// C ⊊ T with matching values and V\T ancestral in G(V\C).
inline bool lemma3_applies(const CausalGraph& g, const Assignment& t, const Assignment& c) {
  if (c.size() >= t.size() || !c.agrees_with(t)) return false;
  for (const auto& n : c.names())
    if (!t.contains(n)) return false;
  NameList keep = set_difference(g, g.observed(), c.names());
  NameList rest = set_difference(g, g.observed(), t.names());
  return is_ancestral(induced_subgraph(g, keep), rest);
}

/// p^t_v - Σ_{T\C} p^c_v for every v consistent with t.
inline std::vector<Polynomial> lemma3_generators(const CausalGraph& g, const Assignment& t,
                                                 const Assignment& c) {
  NameList rest = set_difference(g, g.observed(), t.names());
  NameList summed = set_difference(g, t.names(), c.names());
  std::vector<Polynomial> out;
  for (const auto& r : all_assignments(g, rest)) {
    std::vector<ParamId> parts;
    for (const auto& s : all_assignments(g, summed)) parts.push_back(joint_param(c, merge(g, merge(g, c, r), s)));
    out.push_back(Polynomial(joint_param(t, merge(g, t, r))) - sum_of(parts));
  }
  return out;
}

/// The first applicable candidate (fewest intervened variables, then
/// canonical order) and its generators.
inline std::optional<std::pair<DistributionRequest, std::vector<Polynomial>>> lemma3_relation(
    const CausalGraph& g, const Assignment& t, const std::vector<DistributionRequest>& candidates) {
  std::vector<DistributionRequest> sorted = candidates;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
    return a < b;
  });
  for (const auto& c : sorted)
    if (lemma3_applies(g, t, c.t)) return std::make_pair(c, lemma3_generators(g, t, c.t));
  return std::nullopt;
}

/// Generators of one audit-log step, recomputed from its recorded fields.
inline std::vector<Polynomial> step_generators(const CausalGraph& g, const RelationStep& step) {
  if (step.rule == RelationRule::ancestral_sum) {
    if (step.witnesses.size() != 1) throw InputError("ancestral-sum step needs one witness");
    return lemma3_generators(g, step.family.t, step.witnesses.front().t);
  }
  auto gens = lemma2_relation(g, step.family.t);
  if (!gens) throw InputError("c-component-product step on an indecomposable family " + step.family.to_string());
  return *gens;
}

inline Ideal replay(const CausalGraph& g, const std::vector<RelationStep>& steps) {
  std::vector<Polynomial> gens;
  for (const auto& s : steps)
    for (auto& p : step_generators(g, s)) gens.push_back(std::move(p));
  return Ideal(std::move(gens));
}

inline RelationLedger poly_relations(const CausalGraph& g, std::vector<DistributionRequest> requests) {
  requests = normalize_requests(g, std::move(requests));
  RelationLedger ledger;
  ledger.joint_parameter_count = joint_space_params(g, requests).size();
  std::set<DistributionRequest> present(requests.begin(), requests.end());
  std::set<DistributionRequest> residual = present;

  // Product pass. Factor families join the universe; they form a single
  // c-component, so they never decompose further.
  std::set<DistributionRequest> queue = present;
  while (!queue.empty()) {
    DistributionRequest r = *queue.begin();
    queue.erase(queue.begin());
    NameList rest = set_difference(g, g.observed(), r.t.names());
    if (c_components(induced_subgraph(g, rest)).size() < 2) continue;
    std::set<DistributionRequest> witnesses;
    for (const auto& x : all_assignments(g, rest))
      for (auto& f : lemma2_factors(g, r.t, merge(g, r.t, x))) witnesses.insert(std::move(f));
    for (const auto& w : witnesses)
      if (!present.count(w)) {
        present.insert(w);
        residual.insert(w);
        ledger.added.push_back(w);
        queue.insert(w);
      }
    residual.erase(r);
    ledger.steps.push_back({r, RelationRule::c_component_product, {witnesses.begin(), witnesses.end()}});
  }
  std::sort(ledger.added.begin(), ledger.added.end());
  ledger.residual_after_products.assign(residual.begin(), residual.end());

  // Sum pass against the families still present.
  for (const auto& r : ledger.residual_after_products) {
    std::vector<DistributionRequest> candidates;
    for (const auto& c : residual)
      if (!(c == r)) candidates.push_back(c);
    auto rel = lemma3_relation(g, r.t, candidates);
    if (!rel) continue;
    residual.erase(r);
    ledger.steps.push_back({r, RelationRule::ancestral_sum, {rel->first}});
  }
  ledger.residual.assign(residual.begin(), residual.end());
  ledger.relations = replay(g, ledger.steps);
  return ledger;
}

/// Distinct intervened sets among `requests`, canonical order.
inline std::vector<NameList> families_of(const CausalGraph& g,
                                         const std::vector<DistributionRequest>& requests) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<NameList> out;
  for (const auto& r : requests) {
    std::vector<std::size_t> key;
    for (const auto& n : r.t.names()) key.push_back(g.index_of(n));
    if (seen.insert(key).second) out.push_back(r.t.names());
  }
  std::sort(out.begin(), out.end(), [&g](const NameList& a, const NameList& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[k]) return g.index_of(a[k]) < g.index_of(b[k]);
    return false;
  });
  return out;
}

/// Sum-to-one group of a model parameter: (vertex, parent values, hidden
/// parent values) for q, the hidden vertex for r.
inline std::string parameter_group(const ParamId& p) {
  if (p.kind() == ParamId::Kind::model_q) {
    const auto& q = p.as_q();
    return "q:" + q.var + "|" + q.pa.to_string() + ";" + q.u.to_string();
  }
  if (p.kind() == ParamId::Kind::model_r) return "r:" + p.as_r().var;
  return p.to_string();
}

/// Partition of `requests` into groups whose images share no sum-to-one
/// group of model parameters; groups ordered by first member.
inline std::vector<std::vector<DistributionRequest>> independent_groups(
    const CausalGraph& g, const std::vector<DistributionRequest>& requests) {
  std::vector<std::size_t> parent(requests.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<std::string, std::size_t> owner;
  for (std::size_t k = 0; k < requests.size(); ++k) {
    for (const auto& id : joint_space_params(g, {requests[k]}))
      for (const auto& m : image_polynomial(g, id).variables()) {
        auto [it, fresh] = owner.emplace(parameter_group(m), k);
        if (!fresh) {
          std::size_t a = root(it->second), b = root(k);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
  }
  std::map<std::size_t, std::vector<DistributionRequest>> groups;
  for (std::size_t k = 0; k < requests.size(); ++k) groups[root(k)].push_back(requests[k]);
  std::vector<std::vector<DistributionRequest>> out;
  for (auto& [r, v] : groups) out.push_back(std::move(v));
  return out;
}

/// Kernel of the residual families, one independent group at a time.
inline Ideal residual_kernel(const CausalGraph& g, const std::vector<DistributionRequest>& residual,
                             const GroebnerOptions& options = {}) {
  Ideal out;
  for (const auto& group : independent_groups(g, residual)) {
    out = ideal_sum(out, kernel_direct(g, group, options).ideal);
  }
  return out;
}

/// ker = ker(residual) + relations, projected back onto the requested
/// parameters when factor families had to be added.
inline ConstraintSet reduced_kernel(const CausalGraph& g, std::vector<DistributionRequest> requests,
                                    const GroebnerOptions& options = {}) {
  requests = normalize_requests(g, std::move(requests));
  RelationLedger ledger = poly_relations(g, requests);
  Ideal k = ideal_sum(residual_kernel(g, ledger.residual, options), ledger.relations);
  ConstraintSet c = detail::make_set(g, Ideal{}, Method::reduced, requests);
  if (!ledger.added.empty()) {
    std::vector<ParamId> extra = joint_space_params(g, ledger.added);
    k = elimination_ideal(k, {extra.begin(), extra.end()}, options);
    c.notes.push_back("eliminated " + std::to_string(extra.size()) +
                      " parameters of factor families outside the request");
  }
  c.ideal = std::move(k);
  return c;
}

/// One implicitization sub-problem per c-component C: the family P_{v\c}.
struct SubProblem {
  NameList component;
  std::vector<DistributionRequest> family;
};

inline bool components_edge_free(const CausalGraph& g, std::string* offending = nullptr) {
  for (const auto& c : c_components(g))
    for (const auto& [from, to] : g.edges())
      if (g.is_observed(from) && std::find(c.begin(), c.end(), from) != c.end() &&
          std::find(c.begin(), c.end(), to) != c.end()) {
        if (offending) *offending = from + "->" + to;
        return false;
      }
  return true;
}

inline std::vector<SubProblem> decompose_by_c_components(const CausalGraph& g) {
  std::string edge;
  if (!components_edge_free(g, &edge))
    throw PreconditionError("c-component contains the edge " + edge +
                            "; decomposition does not apply, use the reduced kernel instead");
  std::vector<SubProblem> out;
  for (const auto& c : c_components(g)) {
    NameList t = set_difference(g, g.observed(), c);
    if (t.empty()) throw PreconditionError("a single c-component covers every observed variable");
    out.push_back({c, family(g, t)});
  }
  return out;
}

/// Kernel over every proper-subset intervention, assembled from the
/// component sub-problems and the relations.
inline ConstraintSet decomposed_kernel(const CausalGraph& g, const GroebnerOptions& options = {}) {
  std::vector<SubProblem> subs = decompose_by_c_components(g);
  std::vector<DistributionRequest> all = all_interventions(g);
  RelationLedger ledger = poly_relations(g, all);
  Ideal k = ledger.relations;
  for (const auto& s : subs) k = ideal_sum(k, residual_kernel(g, s.family, options));
  ConstraintSet c = detail::make_set(g, std::move(k), Method::reduced, std::move(all));
  return c;
}

}  // namespace causal_implicits
