#pragma once

// Ideals as generator lists, optionally carrying their reduced Groebner basis
// for one order. Elimination, saturation, membership and equality all go
// through groebner_basis().

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "causal_implicits/groebner.hpp"
#include "causal_implicits/model.hpp"
#include "causal_implicits/polynomial.hpp"

namespace causal_implicits {

class Ideal {
 public:
  Ideal() = default;
  /// Zero generators are dropped.
  explicit Ideal(std::vector<Polynomial> generators) {
    for (auto& g : generators)
      if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  Ideal(std::initializer_list<Polynomial> generators)
      : Ideal(std::vector<Polynomial>(generators)) {}

  /// `basis` must be the reduced Groebner basis under `order`.
  static Ideal from_reduced_basis(std::vector<Polynomial> basis, MonomialOrder order) {
    Ideal i(std::move(basis));
    i.order_ = std::move(order);
    return i;
  }

  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// Set when generators() is the reduced basis under that order.
  const std::optional<MonomialOrder>& basis_order() const noexcept { return order_; }

  std::set<ParamId> variables() const {
    std::set<ParamId> s;
    for (const auto& g : gens_)
      for (const auto& v : g.variables()) s.insert(v);
    return s;
  }

 private:
  std::vector<Polynomial> gens_;
  std::optional<MonomialOrder> order_;
};

inline Ideal groebner(const Ideal& i, const MonomialOrder& order = MonomialOrder::grevlex(),
                      const GroebnerOptions& options = {}) {
  if (i.basis_order() && *i.basis_order() == order) return i;
  return Ideal::from_reduced_basis(groebner_basis(i.generators(), order, options), order);
}

/// I ∩ k[remaining variables]. The result carries its reduced GrevLex basis.
inline Ideal elimination_ideal(const Ideal& i, const std::set<ParamId>& drop,
                               const GroebnerOptions& options = {}) {
  std::vector<Polynomial> basis =
      groebner_basis(i.generators(), MonomialOrder::block(drop), options);
  std::vector<Polynomial> kept;
  for (auto& p : basis)
    if (!p.mentions_any([&](const ParamId& v) { return drop.count(v) > 0; }))
      kept.push_back(std::move(p));
  return Ideal::from_reduced_basis(std::move(kept), MonomialOrder::grevlex());
}

/// An auxiliary variable not occurring in `used`.
inline ParamId fresh_aux(const std::set<ParamId>& used, const std::string& base) {
  ParamId v = ParamId::aux(base);
  for (int k = 1; used.count(v); ++k) v = ParamId::aux(base + std::to_string(k));
  return v;
}

/// I : f^∞ by the Rabinowitsch trick: eliminate y from I + <y*f - 1>.
inline Ideal saturate(const Ideal& i, const Polynomial& f, const GroebnerOptions& options = {}) {
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  std::set<ParamId> used = i.variables();
  for (const auto& v : f.variables()) used.insert(v);
  ParamId y = fresh_aux(used, "sat");
  std::vector<Polynomial> gens = i.generators();
  gens.push_back(Polynomial(y) * f - 1);
  return elimination_ideal(Ideal(std::move(gens)), {y}, options);
}

/// I : (f_1 ⋯ f_k)^∞, one factor at a time: (I : f^∞) : g^∞ = I : (fg)^∞.
inline Ideal saturate_product(Ideal i, const std::vector<Polynomial>& factors,
                              const GroebnerOptions& options = {}) {
  for (const auto& f : factors) {
    if (f.is_constant()) {
      if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
      continue;
    }
    i = saturate(i, f, options);
  }
  return i;
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(std::move(g));
}

inline Ideal ideal_sum(const std::vector<Ideal>& parts) {
  Ideal out;
  for (const auto& p : parts) out = ideal_sum(out, p);
  return out;
}

inline bool contains(const Ideal& i, const Polynomial& f,
                     const MonomialOrder& order = MonomialOrder::grevlex(),
                     const GroebnerOptions& options = {}) {
  if (f.is_zero()) return true;
  Ideal gb = groebner(i, order, options);
  if (gb.is_zero()) return false;
  return normal_form(f, gb.generators(), order).is_zero();
}

/// Every element of `fs` lies in I (one basis computation).
inline bool contains_all(const Ideal& i, const std::vector<Polynomial>& fs,
                         const MonomialOrder& order = MonomialOrder::grevlex(),
                         const GroebnerOptions& options = {}) {
  Ideal gb = groebner(i, order, options);
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    if (gb.is_zero() || !normal_form(f, gb.generators(), order).is_zero()) return false;
  }
  return true;
}

inline bool ideal_equal(const Ideal& a, const Ideal& b,
                        const MonomialOrder& order = MonomialOrder::grevlex(),
                        const GroebnerOptions& options = {}) {
  return groebner(a, order, options).generators() == groebner(b, order, options).generators();
}

/// P_t(a, b, c) as the sum of p^t_v over every v consistent with t that
/// agrees with `fixed`.
inline Polynomial marginal_sum(const CausalGraph& g, const Assignment& t, const Assignment& fixed) {
  NameList free = set_difference(g, g.observed(), set_union(g, t.names(), fixed.names()));
  Assignment base = merge(g, t, fixed);
  std::vector<ParamId> vars;
  for (const auto& rest : all_assignments(g, free)) vars.push_back(joint_param(t, merge(g, base, rest)));
  return sum_of(vars);
}

/// The 2x2 minors P(a,b,c)P(a',b',c) - P(a',b,c)P(a,b',c) for a < a', b < b'
/// (b ranging over joint values of the set B), one block per value of C.
inline Ideal independence_ideal(const IndependenceStatement& stmt, const CausalGraph& g,
                                const Assignment& t) {
  NameList mentioned{stmt.a};
  mentioned.insert(mentioned.end(), stmt.b.begin(), stmt.b.end());
  mentioned.insert(mentioned.end(), stmt.c.begin(), stmt.c.end());
  for (const auto& n : mentioned) {
    if (!g.contains(n) || !g.is_observed(n))
      throw PreconditionError("independence statement mentions unknown variable " + n);
    if (t.contains(n)) throw PreconditionError("independence statement mentions intervened " + n);
  }
  const int da = g.cardinality(stmt.a);
  std::vector<Assignment> bs = all_assignments(g, stmt.b);
  std::vector<Polynomial> gens;
  for (const auto& c : all_assignments(g, stmt.c)) {
    auto P = [&](int a, const Assignment& b) {
      Assignment fixed = merge(g, merge(g, c, b), g.make_assignment({{stmt.a, a}}));
      return marginal_sum(g, t, fixed);
    };
    for (int a1 = 1; a1 <= da; ++a1)
      for (int a2 = a1 + 1; a2 <= da; ++a2)
        for (std::size_t i = 0; i < bs.size(); ++i)
          for (std::size_t j = i + 1; j < bs.size(); ++j) {
            Polynomial m = P(a1, bs[i]) * P(a2, bs[j]) - P(a2, bs[i]) * P(a1, bs[j]);
            if (!m.is_zero()) gens.push_back(std::move(m));
          }
  }
  return Ideal(std::move(gens));
}

}  // namespace causal_implicits
