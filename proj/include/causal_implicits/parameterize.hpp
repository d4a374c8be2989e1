#pragma once

// The parameterization of interventional distributions by CPT entries:
// p^t_v = Σ_u ∏_{i∉T} q^i_{v_i,pa_i,u^i} ∏_j r^j_{u_j}, and the ideal whose
// elimination yields the constraints.

#include <algorithm>
#include <set>
#include <vector>

#include "causal_implicits/ideal.hpp"
#include "causal_implicits/model.hpp"
#include "causal_implicits/params.hpp"
#include "causal_implicits/polynomial.hpp"

namespace causal_implicits {

/// One p^t_v per request and per v consistent with t, in canonical order.
inline std::vector<ParamId> joint_space_params(const CausalGraph& g,
                                               const std::vector<DistributionRequest>& requests) {
  if (requests.empty()) throw PreconditionError("no distribution requested");
  std::vector<ParamId> out;
  for (const auto& r : normalize_requests(g, requests)) {
    NameList free = set_difference(g, g.observed(), r.t.names());
    for (auto& v : all_assignments(g, free)) out.push_back(ParamId::joint(r.t, std::move(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// q^i_{v_i,pa_i,u^i} for every observed i and every context, then r^j_{u_j}.
inline std::vector<ParamId> model_params(const CausalGraph& g) {
  std::vector<ParamId> out;
  for (const auto& name : g.observed()) {
    NameList pa = g.parents(name);
    NameList hp = g.hidden_parents(name);
    for (const auto& a : all_assignments(g, pa))
      for (const auto& u : all_assignments(g, hp))
        for (int x = 1; x <= g.cardinality(name); ++x)
          out.push_back(ParamId(ModelQId{name, x, a, u}));
  }
  for (const auto& name : g.hidden())
    for (int x = 1; x <= g.cardinality(name); ++x) out.push_back(ParamId(ModelRId{name, x}));
  std::sort(out.begin(), out.end());
  return out;
}

/// q^i for vertex `name` at the values of `full` (observed) and `u` (hidden).
inline ParamId q_param(const CausalGraph& g, const std::string& name, const Assignment& full,
                       const HiddenAssignment& u) {
  return ParamId(ModelQId{name, *full.get(name), full.restricted_to(g.parents(name)),
                          u.restricted_to(g.hidden_parents(name))});
}

/// Hidden variables with at least one child outside T. The others integrate
/// out to Σ r = 1 and are left out of the expansion.
inline NameList relevant_hidden(const CausalGraph& g, const Assignment& t) {
  NameList out;
  for (const auto& h : g.hidden())
    for (const auto& c : g.children(h))
      if (!t.contains(c)) {
        out.push_back(h);
        break;
      }
  return out;
}

/// Φ(p^t_v) (or Ψ(p^t_v) with hidden variables) as a polynomial in model
/// parameters.
inline Polynomial image_polynomial(const CausalGraph& g, const ParamId& id) {
  if (!id.is_joint()) throw PreconditionError("image_polynomial: " + id.to_string() + " is not a joint-space parameter");
  const auto& j = id.as_joint();
  Assignment full = full_assignment(g, j);
  if (full.size() != g.observed().size())
    throw PreconditionError("image_polynomial: " + id.to_string() + " is not a total assignment");
  NameList free = set_difference(g, g.observed(), j.t.names());
  NameList hidden = relevant_hidden(g, j.t);
  std::vector<Term> terms;
  for (const auto& u : all_assignments(g, hidden)) {
    std::vector<Monomial::Factor> f;
    for (const auto& n : free) f.emplace_back(q_param(g, n, full, u), 1);
    for (const auto& [h, val] : u.entries()) f.emplace_back(ParamId(ModelRId{h, val}), 1);
    terms.push_back({Rational(1), Monomial::from_factors(std::move(f))});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// Σ_{v_i} q^i_{v_i,pa,u} - 1 for every context, and Σ_{u_j} r^j_{u_j} - 1.
inline std::vector<Polynomial> sum_to_one_generators(const CausalGraph& g) {
  std::vector<Polynomial> out;
  for (const auto& name : g.observed())
    for (const auto& a : all_assignments(g, g.parents(name)))
      for (const auto& u : all_assignments(g, g.hidden_parents(name))) {
        std::vector<ParamId> vs;
        for (int x = 1; x <= g.cardinality(name); ++x) vs.push_back(ParamId(ModelQId{name, x, a, u}));
        out.push_back(sum_of(vs) - 1);
      }
  for (const auto& name : g.hidden()) {
    std::vector<ParamId> vs;
    for (int x = 1; x <= g.cardinality(name); ++x) vs.push_back(ParamId(ModelRId{name, x}));
    out.push_back(sum_of(vs) - 1);
  }
  return out;
}

/// <p^t_v - image(p^t_v)> + sum-to-one generators.
inline Ideal mapping_ideal(const CausalGraph& g, const std::vector<DistributionRequest>& requests) {
  std::vector<Polynomial> gens;
  for (const auto& id : joint_space_params(g, requests))
    gens.push_back(Polynomial(id) - image_polynomial(g, id));
  for (auto& s : sum_to_one_generators(g)) gens.push_back(std::move(s));
  return Ideal(std::move(gens));
}

inline std::set<ParamId> model_param_set(const CausalGraph& g) {
  auto v = model_params(g);
  return {v.begin(), v.end()};
}


}  // namespace causal_implicits
