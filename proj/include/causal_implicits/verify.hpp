#pragma once

// Forward computation of interventional distributions from CPT values,
// evaluation of constraints on probability tables, and random models.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "causal_implicits/kernel.hpp"
#include "causal_implicits/parameterize.hpp"

namespace causal_implicits {

/// A value for every q and r parameter of a graph.
using ModelPoint = std::map<ParamId, Rational>;

/// Every value in [0,1] and every sum-to-one group summing to exactly 1.
inline void validate_point(const CausalGraph& g, const ModelPoint& point) {
  for (const auto& id : model_params(g)) {
    auto it = point.find(id);
    if (it == point.end()) throw MissingParameterError("model point lacks " + id.to_string());
    if (it->second < 0 || it->second > 1)
      throw InputError("model parameter " + id.to_string() + " outside [0,1]");
  }
  for (const auto& s : sum_to_one_generators(g)) {
    Rational total = 0;
    for (const auto& t : s.terms())
      if (!t.mono.is_one()) total += point.at(t.mono.factors().front().first);
    if (total != 1) throw InputError("model parameters do not sum to one in " + s.to_string());
  }
}

/// CPT columns drawn as positive integer weights normalized to one; every
/// denominator is at most 1000. Deterministic in `seed`.
inline ModelPoint random_model(const CausalGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ModelPoint point;
  auto column = [&](const std::vector<ParamId>& ids) {
    const std::uint64_t range = std::max<std::uint64_t>(1, 1000 / ids.size());
    std::vector<std::uint64_t> w;
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      w.push_back(1 + rng() % range);
      total += w.back();
    }
    for (std::size_t k = 0; k < ids.size(); ++k)
      point[ids[k]] = Rational(mpz_class(static_cast<unsigned long>(w[k])),
                               mpz_class(static_cast<unsigned long>(total)));
  };
  for (const auto& name : g.observed())
    for (const auto& a : all_assignments(g, g.parents(name)))
      for (const auto& u : all_assignments(g, g.hidden_parents(name))) {
        std::vector<ParamId> ids;
        for (int x = 1; x <= g.cardinality(name); ++x) ids.push_back(ParamId(ModelQId{name, x, a, u}));
        column(ids);
      }
  for (const auto& name : g.hidden()) {
    std::vector<ParamId> ids;
    for (int x = 1; x <= g.cardinality(name); ++x) ids.push_back(ParamId(ModelRId{name, x}));
    column(ids);
  }
  for (auto& [id, q] : point) q.canonicalize();
  return point;
}

/// P_t(v) for one request: entries keyed by the free part v\t.
struct DistributionTable {
  enum class Mode { exact, empirical };

  DistributionRequest request;
  std::map<Assignment, Rational> entries;
  /// Empirical tables come from decimal data; their values are still held
  /// exactly as written.
  Mode mode = Mode::exact;

  Rational total() const {
    Rational s = 0;
    for (const auto& [v, p] : entries) s += p;
    return s;
  }
};

/// Full support present, no negative entry, and a total of one (exactly for
/// exact tables, within `tolerance` for empirical ones).
inline void validate_table(const CausalGraph& g, const DistributionTable& table,
                           double tolerance = 1e-6) {
  NameList free = set_difference(g, g.observed(), table.request.t.names());
  std::vector<Assignment> expected = all_assignments(g, free);
  for (const auto& v : expected)
    if (!table.entries.count(v))
      throw MissingParameterError("table for do(" + table.request.to_string() + ") lacks entry " + v.to_string());
  if (table.entries.size() != expected.size())
    throw InputError("table for do(" + table.request.to_string() + ") has entries outside its support");
  for (const auto& [v, p] : table.entries)
    if (p < 0) throw InputError("negative probability at " + v.to_string());
  Rational total = table.total();
  if (table.mode == DistributionTable::Mode::exact) {
    if (total != 1) throw InputError("exact table for do(" + table.request.to_string() + ") sums to " + total.get_str());
  } else if (std::abs(total.get_d() - 1.0) > tolerance) {
    throw InputError("table for do(" + table.request.to_string() + ") sums to " + std::to_string(total.get_d()));
  }
}

/// P_t(v) = Σ_u ∏_{i∉T} P(v_i | pa_i, u^i) ∏_j P(u_j), by direct enumeration
/// over every hidden assignment.
inline DistributionTable exact_distribution(const CausalGraph& g, const ModelPoint& point,
                                            const Assignment& t) {
  if (t.size() >= g.observed().size())
    throw PreconditionError("request " + t.to_string() + " intervenes on every observed variable");
  DistributionTable table;
  table.request = {t};
  NameList free = set_difference(g, g.observed(), t.names());
  std::vector<Assignment> hidden = all_assignments(g, g.hidden());
  auto value = [&](const ParamId& id) -> const Rational& {
    auto it = point.find(id);
    if (it == point.end()) throw MissingParameterError("model point lacks " + id.to_string());
    return it->second;
  };
  for (const auto& rest : all_assignments(g, free)) {
    Assignment v = merge(g, t, rest);
    Rational p = 0;
    for (const auto& u : hidden) {
      Rational term = 1;
      for (const auto& n : free) term *= value(q_param(g, n, v, u));
      for (const auto& [h, x] : u.entries()) term *= value(ParamId(ModelRId{h, x}));
      p += term;
    }
    table.entries.emplace(rest, std::move(p));
  }
  return table;
}

inline std::vector<DistributionTable> exact_distributions(const CausalGraph& g, const ModelPoint& point,
                                                          const std::vector<DistributionRequest>& requests) {
  std::vector<DistributionTable> out;
  for (const auto& r : requests) out.push_back(exact_distribution(g, point, r.t));
  return out;
}

/// Substitutes table values for every joint-space parameter of f.
inline Rational evaluate(const Polynomial& f, const std::vector<DistributionTable>& tables) {
  std::map<Assignment, const DistributionTable*> by_t;
  for (const auto& t : tables) by_t.emplace(t.request.t, &t);
  std::map<ParamId, Rational> cache;
  auto lookup = [&](const ParamId& id) -> const Rational& {
    auto c = cache.find(id);
    if (c != cache.end()) return c->second;
    if (!id.is_joint()) throw MissingParameterError("cannot evaluate non-joint parameter " + id.to_string());
    auto t = by_t.find(id.as_joint().t);
    if (t == by_t.end()) throw MissingParameterError("no table provides " + id.to_string());
    auto e = t->second->entries.find(id.as_joint().free);
    if (e == t->second->entries.end()) throw MissingParameterError("no table entry for " + id.to_string());
    return cache.emplace(id, e->second).first->second;
  };
  Rational total = 0;
  for (const auto& term : f.terms()) {
    Rational x = term.coef;
    for (const auto& [id, e] : term.mono.factors())
      for (unsigned k = 0; k < e; ++k) x *= lookup(id);
    total += x;
  }
  return total;
}

struct GeneratorCheck {
  std::size_t index = 0;
  Rational value;
  bool pass = true;
};

struct CheckReport {
  std::vector<GeneratorCheck> results;
  bool exact = true;
  double tolerance = 0;
  bool all_pass = true;
  bool vacuous = false;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Per-generator values against |value| <= tolerance. When every table is
/// exact the tolerance is zero regardless of the argument.
inline CheckReport check(const ConstraintSet& constraints, const std::vector<DistributionTable>& tables,
                         double tolerance = kDefaultTolerance) {
  if (tolerance < 0) throw InputError("tolerance must be nonnegative");
  CheckReport report;
  report.exact = std::all_of(tables.begin(), tables.end(),
                             [](const auto& t) { return t.mode == DistributionTable::Mode::exact; });
  report.tolerance = report.exact ? 0.0 : tolerance;
  report.vacuous = constraints.ideal.is_zero();
  const auto& gens = constraints.ideal.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    GeneratorCheck r;
    r.index = k;
    r.value = evaluate(gens[k], tables);
    r.pass = report.exact ? r.value == 0 : std::abs(r.value.get_d()) <= report.tolerance;
    report.all_pass = report.all_pass && r.pass;
    report.results.push_back(std::move(r));
  }
  return report;
}

/// Membership of a candidate polynomial in the constraint ideal.
inline bool member(const Polynomial& candidate, const ConstraintSet& constraints,
                   const GroebnerOptions& options = {}) {
  return contains(constraints.ideal, candidate, MonomialOrder::grevlex(), options);
}

}  // namespace causal_implicits
