#pragma once

// Constraint derivation: ker(Φ) by elimination (directly or in two steps when
// hidden variables are present) and by closed forms for fully observed
// graphs.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "causal_implicits/ideal.hpp"
#include "causal_implicits/model.hpp"
#include "causal_implicits/parameterize.hpp"

namespace causal_implicits {

enum class Method { direct, two_step, prop1, eq19, prop2, lemma1, reduced };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::two_step: return "two-step";
    case Method::prop1: return "prop1";
    case Method::eq19: return "eq19";
    case Method::prop2: return "prop2";
    case Method::lemma1: return "lemma1";
    case Method::reduced: return "reduced";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  for (Method m : {Method::direct, Method::two_step, Method::prop1, Method::eq19, Method::prop2,
                   Method::lemma1, Method::reduced})
    if (to_string(m) == s) return m;
  if (s == "reduce") return Method::reduced;
  throw InputError("unknown method '" + std::string(s) + "'");
}

struct ConstraintSet {
  Ideal ideal;
  Method method = Method::direct;
  std::string graph_digest;
  std::vector<DistributionRequest> requests;
  /// Caveats about how the generators were obtained.
  std::vector<std::string> notes;
};

/// True if no generator mentions a model or auxiliary parameter.
inline bool mentions_only_joint(const Ideal& i) {
  for (const auto& g : i.generators())
    if (g.mentions_any([](const ParamId& p) { return !p.is_joint(); })) return false;
  return true;
}

namespace detail {

inline ConstraintSet make_set(const CausalGraph& g, Ideal ideal, Method m,
                              std::vector<DistributionRequest> requests) {
  ConstraintSet c;
  c.ideal = std::move(ideal);
  c.method = m;
  c.graph_digest = graph_digest(g);
  c.requests = std::move(requests);
  return c;
}

inline void require_observed(const CausalGraph& g, const char* what) {
  if (g.has_hidden())
    throw PreconditionError(std::string(what) + " requires a graph without hidden variables");
}

inline void require_proper(const CausalGraph& g, const Assignment& t) {
  if (t.size() >= g.observed().size())
    throw PreconditionError("request " + t.to_string() + " intervenes on every observed variable");
}

}  // namespace detail

/// I ∩ R[J]: eliminate every model parameter from the mapping ideal.
inline ConstraintSet kernel_direct(const CausalGraph& g, std::vector<DistributionRequest> requests,
                                   const GroebnerOptions& options = {}) {
  requests = normalize_requests(g, std::move(requests));
  Ideal k = elimination_ideal(mapping_ideal(g, requests), model_param_set(g), options);
  return detail::make_set(g, std::move(k), Method::direct, std::move(requests));
}

/// The graph with every hidden variable declared observed.
inline CausalGraph all_observed(const CausalGraph& g) {
  std::vector<Variable> vars = g.variables();
  for (auto& v : vars) v.kind = VariableKind::observed;
  return CausalGraph(std::move(vars), g.edges());
}

/// Kernel over the extended parameters p^t_{vu} of the all-observed graph,
/// then marginalization p^t_v - Σ_u p^t_{vu} and elimination of the p^t_{vu}.
inline ConstraintSet kernel_two_step(const CausalGraph& g, std::vector<DistributionRequest> requests,
                                     const GroebnerOptions& options = {}) {
  if (!g.has_hidden()) throw PreconditionError("two-step method requires hidden variables");
  requests = normalize_requests(g, std::move(requests));
  CausalGraph gu = all_observed(g);
  Ideal extended = kernel_direct(gu, requests, options).ideal;
  std::vector<ParamId> ext = joint_space_params(gu, requests);
  std::vector<Polynomial> gens = extended.generators();
  NameList hidden = g.hidden();
  for (const auto& r : requests) {
    NameList free = set_difference(g, g.observed(), r.t.names());
    for (const auto& v : all_assignments(g, free)) {
      std::vector<ParamId> parts;
      for (const auto& u : all_assignments(gu, hidden)) parts.push_back(ParamId::joint(r.t, merge(gu, v, u)));
      gens.push_back(Polynomial(ParamId::joint(r.t, v)) - sum_of(parts));
    }
  }
  Ideal k = elimination_ideal(Ideal(std::move(gens)), {ext.begin(), ext.end()}, options);
  return detail::make_set(g, std::move(k), Method::two_step, std::move(requests));
}

/// Σ_{v\t} p^t_v - 1.
inline Polynomial sum_to_one(const CausalGraph& g, const Assignment& t) {
  return marginal_sum(g, t, Assignment{}) - 1;
}

/// Local Markov statements of G(V\T) expanded over the p^t parameters.
inline Ideal local_markov_ideal(const CausalGraph& g, const Assignment& t) {
  detail::require_observed(g, "local_markov_ideal");
  CausalGraph sub = induced_subgraph(g, set_difference(g, g.observed(), t.names()));
  Ideal out;
  for (const auto& s : local_markov(sub)) out = ideal_sum(out, independence_ideal(s, g, t));
  return out;
}

/// The linear forms p^t_{+..+ v_{i+1} .. v_{i_k}} whose product saturates the
/// local Markov ideal: with V\T ordered sink first, marginalize each proper
/// prefix and keep one form per value of the remaining suffix.
inline std::vector<Polynomial> saturating_forms(const CausalGraph& g, const Assignment& t) {
  NameList order = sink_first_order(g, set_difference(g, g.observed(), t.names()));
  std::vector<Polynomial> out;
  for (std::size_t prefix = 0; prefix < order.size(); ++prefix) {
    NameList suffix(order.begin() + static_cast<std::ptrdiff_t>(prefix), order.end());
    for (const auto& s : all_assignments(g, suffix)) out.push_back(marginal_sum(g, t, s));
  }
  return out;
}

/// (I_local(G(V\T)) : p^∞) + <Σ p^t_v - 1>.
inline ConstraintSet kernel_prop1(const CausalGraph& g, const Assignment& t,
                                  const GroebnerOptions& options = {}) {
  detail::require_observed(g, "kernel_prop1");
  detail::require_proper(g, t);
  Ideal local = local_markov_ideal(g, t);
  if (!local.is_zero()) local = saturate_product(local, saturating_forms(g, t), options);
  Ideal k = ideal_sum(local, Ideal{sum_to_one(g, t)});
  return detail::make_set(g, std::move(k), Method::prop1, {DistributionRequest{t}});
}

/// p^{v\v_i}_v: intervene on everything but V_i, at the values of v.
inline ParamId singleton_param(const Assignment& v, const std::string& name) {
  return joint_param(v.without({name}), v);
}

/// Every p^t_v written as the product of the singleton-family parameters
/// p^{v\v_i}_v, over all of P_*. The singleton families are tied together
/// as well: p^{v\v_i}_v depends on v only through (v_i, pa_i), and sums to
/// one over v_i.
inline ConstraintSet kernel_eq19(const CausalGraph& g) {
  detail::require_observed(g, "kernel_eq19");
  std::vector<DistributionRequest> requests = all_interventions(g);
  NameList obs = g.observed();
  std::vector<Polynomial> gens;
  for (const auto& r : requests) {
    NameList free = set_difference(g, obs, r.t.names());
    if (free.size() < 2) continue;
    for (const auto& rest : all_assignments(g, free)) {
      Assignment v = merge(g, r.t, rest);
      std::vector<ParamId> factors;
      for (const auto& n : free) factors.push_back(singleton_param(v, n));
      gens.push_back(Polynomial(joint_param(r.t, v)) - product_of(factors));
    }
  }
  std::vector<Polynomial> ties;
  for (const auto& n : obs) {
    NameList others = set_difference(g, obs, {n});
    NameList pa = g.parents(n);
    std::map<std::pair<int, Assignment>, ParamId> representative;
    for (const auto& w : all_assignments(g, others)) {
      std::vector<ParamId> column;
      for (int x = 1; x <= g.cardinality(n); ++x) {
        Assignment v = merge(g, w, g.make_assignment({{n, x}}));
        ParamId p = singleton_param(v, n);
        column.push_back(p);
        auto [it, fresh] = representative.emplace(std::make_pair(x, v.restricted_to(pa)), p);
        if (!fresh) ties.push_back(Polynomial(p) - Polynomial(it->second));
      }
      ties.push_back(sum_of(column) - 1);
    }
  }
  gens.insert(gens.end(), ties.begin(), ties.end());
  ConstraintSet c = detail::make_set(g, Ideal(std::move(gens)), Method::eq19, std::move(requests));
  c.notes.push_back(
      "singleton-family parameters p^{v\\v_i}_v read as q^i_{v_i,pa_i}; tied across non-parent "
      "values and normalized");
  return c;
}

/// {P, P_t} when V\T contains its own ancestors: ker(P) plus
/// p^t_v - Σ_t p_v.
inline ConstraintSet kernel_prop2(const CausalGraph& g, const Assignment& t,
                                  const GroebnerOptions& options = {}) {
  detail::require_observed(g, "kernel_prop2");
  detail::require_proper(g, t);
  if (t.empty()) throw PreconditionError("kernel_prop2 needs a nonempty intervention");
  NameList rest = set_difference(g, g.observed(), t.names());
  if (!is_ancestral(g, rest))
    throw PreconditionError("kernel_prop2: V\\T is not ancestral for " + t.to_string());
  Ideal k = kernel_prop1(g, Assignment{}, options).ideal;
  std::vector<Polynomial> links;
  for (const auto& v : all_assignments(g, rest))
    links.push_back(Polynomial(joint_param(t, merge(g, t, v))) - marginal_sum(g, Assignment{}, v));
  k = ideal_sum(k, Ideal(std::move(links)));
  return detail::make_set(g, std::move(k), Method::prop2, {DistributionRequest{}, DistributionRequest{t}});
}

/// The bridge polynomials f(v,t)·Σ_{w1,v_cons} p_v - Σ_{w1} p_v linking P
/// and P_t when V\T is an antichain. f(v,t) is the product over V_i in
/// V_cons of the P_t-marginal of V_i at cons(v,t).
inline std::vector<Polynomial> lemma1_bridge(const CausalGraph& g, const Assignment& t) {
  AntichainSplit split = antichain_split(g, t.names());
  std::vector<Polynomial> out;
  for (const auto& v : all_assignments(g, g.observed())) {
    NameList vcons = consistent_set(g, v, t);
    Assignment c = cons(g, v, t);
    Polynomial f(1);
    for (const auto& n : vcons) f *= marginal_sum(g, t, c.restricted_to({n}));
    NameList summed = set_union(g, split.w1, vcons);
    Polynomial bridge = f * marginal_sum(g, Assignment{}, v.without(summed)) -
                        marginal_sum(g, Assignment{}, v.without(split.w1));
    if (!bridge.is_zero()) out.push_back(std::move(bridge));
  }
  return out;
}

/// {P, P_t} when no vertex of V\T is an ancestor of another:
/// ker(P) + ker(P_t) + bridge polynomials.
inline ConstraintSet kernel_lemma1(const CausalGraph& g, const Assignment& t,
                                   const GroebnerOptions& options = {}) {
  detail::require_observed(g, "kernel_lemma1");
  detail::require_proper(g, t);
  if (t.empty()) throw PreconditionError("kernel_lemma1 needs a nonempty intervention");
  std::vector<Polynomial> bridge = lemma1_bridge(g, t);
  Ideal k = ideal_sum({kernel_prop1(g, Assignment{}, options).ideal, kernel_prop1(g, t, options).ideal,
                       Ideal(std::move(bridge))});
  return detail::make_set(g, std::move(k), Method::lemma1, {DistributionRequest{}, DistributionRequest{t}});
}

}  // namespace causal_implicits
