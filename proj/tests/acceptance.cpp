// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>

#include "cli.hpp"
#include "support.hpp"

using namespace causal_implicits;
using ci_test::at;
using ci_test::P;
using ci_test::pv;

namespace {

constexpr int kSoundnessPoints = 100;
constexpr int kIdentityPoints = 100;
constexpr int kRandomGraphs = 10;
constexpr int kMaxTernary = 1;
constexpr double kDeriveSeconds = 30;

struct Outcome {
  bool pass;
  std::string detail;
};

Variable obs(const std::string& n) { return {n, 2, VariableKind::observed}; }
Variable hid(const std::string& n) { return {n, 2, VariableKind::hidden}; }

Polynomial total(const CausalGraph& g, const Assignment& t = {}) {
  Polynomial s;
  for (const auto& r : all_assignments(g, set_difference(g, g.observed(), t.names())))
    s += P(joint_param(t, merge(g, t, r)));
  return s;
}

Ideal common_cause_kernel(const CausalGraph& g) {
  auto p = [&](const char* d) { return P(pv(g, d)); };
  return Ideal{p("111") * p("221") - p("121") * p("211"), p("112") * p("222") - p("122") * p("212"),
               total(g) - 1};
}

std::vector<CausalGraph> random_graphs() {
  std::vector<CausalGraph> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < kRandomGraphs; ++seed) {
    auto g = ci_test::random_graph(1000 + seed, 3, 4, 1, kMaxTernary);
    // Keep half with a hidden variable so both branches get exercised.
    if ((out.size() % 2 == 0) != g.has_hidden()) continue;
    out.push_back(std::move(g));
  }
  return out;
}

Outcome common_cause_observational() {
  auto g = ci_test::common_cause();
  auto c = cli::derive_auto(g, {{}}, {});
  auto d = kernel_direct(g, {{}});
  bool ok = ideal_equal(c.ideal, common_cause_kernel(g)) && ideal_equal(d.ideal, common_cause_kernel(g));
  return {ok, "derive (" + to_string(c.method) + ") and direct elimination vs the two minors + normalization"};
}

Outcome saturation_identity() {
  auto g = ci_test::common_cause();
  Ideal local = local_markov_ideal(g, {});
  std::vector<Polynomial> vars;
  for (const auto& id : joint_space_params(g, {{}})) vars.push_back(P(id));
  Ideal sat = saturate_product(local, vars);
  return {ideal_equal(sat, local), "I_local : (prod p)^inf over " + std::to_string(vars.size()) + " parameters"};
}

Outcome two_distribution_forms() {
  auto g = ci_test::common_cause();
  auto t = at(g, {{"V1", 1}});
  std::vector<Polynomial> links;
  for (int b = 1; b <= 2; ++b)
    for (int c = 1; c <= 2; ++c) {
      auto v1 = at(g, {{"V1", 1}, {"V2", b}, {"V3", c}});
      auto v2 = at(g, {{"V1", 2}, {"V2", b}, {"V3", c}});
      links.push_back(P(joint_param(t, v1)) - P(joint_param({}, v1)) - P(joint_param({}, v2)));
    }
  bool prop2 = ideal_equal(kernel_prop2(g, t).ideal, ideal_sum(common_cause_kernel(g), Ideal(links)));

  auto s = at(g, {{"V3", 1}});
  Polynomial slice;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) slice += P(joint_param({}, at(g, {{"V1", a}, {"V2", b}, {"V3", 1}})));
  std::vector<Polynomial> bridge;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      auto v = at(g, {{"V1", a}, {"V2", b}, {"V3", 1}});
      bridge.push_back(P(joint_param(s, v)) * slice - P(joint_param({}, v)));
    }
  auto l1 = kernel_lemma1(g, s);
  bool hand = ideal_equal(l1.ideal, ideal_sum({common_cause_kernel(g), kernel_prop1(g, s).ideal, Ideal(bridge)}));
  bool direct = ideal_equal(l1.ideal, kernel_direct(g, {{}, {s}}).ideal);
  return {prop2 && hand && direct, std::string("prop2=") + (prop2 ? "ok" : "differs") +
                                       " lemma1/assembly=" + (hand ? "ok" : "differs") +
                                       " lemma1/direct=" + (direct ? "ok" : "differs")};
}

Outcome all_interventions_product() {
  std::vector<CausalGraph> graphs{
      CausalGraph({obs("V1"), obs("V2")}, {{"V2", "V1"}}),
      CausalGraph({obs("V1"), obs("V2")}, {}),
      ci_test::common_cause(),
      CausalGraph({obs("V1"), obs("V2"), obs("V3")}, {{"V3", "V2"}, {"V2", "V1"}}),
  };
  std::string detail;
  bool ok = true;
  for (const auto& g : graphs) {
    bool eq = ideal_equal(kernel_eq19(g).ideal, kernel_direct(g, all_interventions(g)).ideal);
    ok = ok && eq;
    detail += std::to_string(g.observed().size()) + "-var:" + (eq ? "ok " : "differs ");
  }
  return {ok, detail + "(eq19 vs direct over all proper interventions)"};
}

Outcome reduction_walkthrough() {
  auto g = ci_test::confounded_chain();
  auto ledger = poly_relations(g, all_interventions(g));
  auto fam = [&](const std::vector<DistributionRequest>& rs) {
    auto f = families_of(g, rs);
    return std::set<NameList>(f.begin(), f.end());
  };
  std::set<NameList> five{{"V2", "V4"}, {"V1", "V2", "V3"}, {"V1", "V2", "V4"}, {"V1", "V3", "V4"}, {"V2", "V3", "V4"}};
  std::set<NameList> three{{"V2", "V4"}, {"V1", "V2", "V3"}, {"V1", "V3", "V4"}};
  auto subs = decompose_by_c_components(g);
  bool ok = ledger.joint_parameter_count == 240 && fam(ledger.residual_after_products) == five &&
            fam(ledger.residual) == three && subs.size() == 3;
  return {ok, std::to_string(ledger.joint_parameter_count) + " parameters, " +
                  std::to_string(fam(ledger.residual_after_products).size()) + " families after products, " +
                  std::to_string(fam(ledger.residual).size()) + " after sums, " + std::to_string(subs.size()) +
                  " sub-problems"};
}

// Derivations that exceed kDeriveSeconds are listed rather than counted as
// unsound; each graph must still yield at least one derived set.
Outcome soundness() {
  std::vector<CausalGraph> graphs{ci_test::common_cause(), ci_test::confounded_chain()};
  for (auto& g : random_graphs()) graphs.push_back(std::move(g));
  std::size_t sets = 0, generators = 0, failures = 0, bare_graphs = 0;
  std::uint64_t seed = 1;
  GroebnerOptions budget;
  budget.max_seconds = kDeriveSeconds;
  std::string over;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& g = graphs[gi];
    std::vector<std::vector<DistributionRequest>> requests{{{}}, all_interventions(g)};
    for (const auto& r : all_interventions(g))
      if (r.t.size() == 1) {
        requests.push_back({{}, r});
        break;
      }
    std::size_t derived = 0;
    for (std::size_t ri = 0; ri < requests.size(); ++ri) {
      ConstraintSet c;
      try {
        c = cli::derive_auto(g, requests[ri], budget);
      } catch (const IntractableError&) {
        static const char* kinds[] = {"observational", "all-interventions", "observational+single"};
        over += " graph#" + std::to_string(gi) + "/" + kinds[ri];
        continue;
      }
      ++derived;
      generators += c.ideal.generators().size();
      failures += ci_test::soundness_failures(g, c, kSoundnessPoints, seed);
      seed += kSoundnessPoints;
    }
    sets += derived;
    if (derived == 0) ++bare_graphs;
  }
  return {failures == 0 && bare_graphs == 0,
          std::to_string(graphs.size()) + " graphs, " + std::to_string(sets) + " constraint sets, " +
              std::to_string(generators) + " generators x " + std::to_string(kSoundnessPoints) + " points, " +
              std::to_string(failures) + " nonzero; over budget:" + (over.empty() ? " none" : over)};
}

Outcome lemma_identities() {
  std::vector<CausalGraph> graphs{ci_test::common_cause(), ci_test::confounded_chain()};
  for (auto& g : random_graphs()) graphs.push_back(std::move(g));
  std::size_t triples = 0, evaluations = 0, failures = 0;
  for (const auto& g : graphs) {
    auto all = all_interventions(g);
    std::vector<Polynomial> gens;
    for (const auto& r : all) {
      if (auto rel = lemma2_relation(g, r.t)) {
        ++triples;
        gens.insert(gens.end(), rel->begin(), rel->end());
      }
      for (const auto& c : all)
        if (lemma3_applies(g, r.t, c.t)) {
          ++triples;
          auto more = lemma3_generators(g, r.t, c.t);
          gens.insert(gens.end(), more.begin(), more.end());
        }
    }
    for (int k = 0; k < kIdentityPoints; ++k) {
      auto tables = exact_distributions(g, random_model(g, 7000 + static_cast<std::uint64_t>(k)), all);
      for (const auto& f : gens) {
        ++evaluations;
        if (evaluate(f, tables) != 0) ++failures;
      }
    }
  }
  return {failures == 0 && triples > 0, std::to_string(triples) + " (graph, t, c) cases, " +
                                            std::to_string(evaluations) + " evaluations, " +
                                            std::to_string(failures) + " nonzero"};
}

Outcome two_step_matches_direct() {
  std::vector<CausalGraph> graphs{
      CausalGraph({obs("A"), obs("B"), hid("U")}, {{"U", "A"}, {"U", "B"}}),
      CausalGraph({obs("A"), obs("B"), hid("U")}, {{"A", "B"}, {"U", "A"}, {"U", "B"}}),
  };
  bool ok = true;
  std::size_t cases = 0;
  for (const auto& g : graphs) {
    std::vector<std::vector<DistributionRequest>> requests{{{}}, {{}, {at(g, {{"A", 1}})}}};
    if (g.parents("B").size() == 1) requests.push_back(all_interventions(g));
    for (const auto& rs : requests) {
      ++cases;
      ok = ok && ideal_equal(kernel_two_step(g, rs).ideal, kernel_direct(g, rs).ideal);
    }
  }
  return {ok, std::to_string(cases) + " request sets on two 2-observed/1-hidden graphs"};
}

Outcome groebner_properties() {
  auto x = P(ParamId::aux("x")), y = P(ParamId::aux("y")), z = P(ParamId::aux("z")), w = P(ParamId::aux("w"));
  std::vector<std::vector<Polynomial>> systems{
      {x + y + z + w, x * y + y * z + z * w + w * x, x * y * z + y * z * w + z * w * x + w * x * y,
       x * y * z * w - 1},
      {x * x - y, x * y - z, x * z - w},
      {x * x + y * y - 1, x - y * y * y, z * x - 2},
      local_markov_ideal(ci_test::common_cause(), {}).generators(),
  };
  auto g = ci_test::common_cause();
  systems.push_back(mapping_ideal(g, {{}}).generators());
  std::size_t bases = 0, problems = 0;
  for (const auto& gens : systems)
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      GroebnerOptions one;
      auto ref = groebner_basis(gens, order, one);
      ++bases;
      if (!is_groebner_basis(ref, order) || !is_reduced_basis(ref, order)) ++problems;
      for (unsigned threads : {1u, 2u, 4u}) {
        GroebnerOptions o;
        o.threads = threads;
        if (groebner_basis(gens, order, o) != ref) ++problems;
      }
      std::vector<Polynomial> reversed(gens.rbegin(), gens.rend());
      if (groebner_basis(reversed, order, one) != ref) ++problems;
    }
  // Elimination: no dropped variable survives, every output lies in the source.
  std::vector<std::pair<Ideal, std::set<ParamId>>> elims{
      {Ideal{x - y * y, z - y * y * y}, {ParamId::aux("y")}},
      {Ideal{x * x - y, x * y - z, x * z - w}, {ParamId::aux("x")}},
      {mapping_ideal(g, {{}}), model_param_set(g)},
  };
  for (const auto& [i, drop] : elims) {
    auto e = elimination_ideal(i, drop);
    ++bases;
    for (const auto& f : e.generators())
      for (const auto& v : f.variables())
        if (drop.count(v)) ++problems;
    if (!contains_all(i, e.generators())) ++problems;
  }
  return {problems == 0, std::to_string(bases) + " bases/eliminations checked, " + std::to_string(problems) +
                             " property violations"};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 observational kernel of the common-cause graph", common_cause_observational},
      {"2 local Markov ideal is saturated", saturation_identity},
      {"3 two-distribution closed forms", two_distribution_forms},
      {"4 all-interventions product form", all_interventions_product},
      {"5 reduction walkthrough on the four-variable graph", reduction_walkthrough},
      {"6 soundness on random model points", soundness},
      {"7 product and summation identities", lemma_identities},
      {"8 two-step elimination equals direct", two_step_matches_direct},
      {"9 Groebner engine properties", groebner_properties},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " | " << o.detail << " | " << secs << " s" << std::endl;
  }
  auto g = ci_test::confounded_chain();
  auto subs = decompose_by_c_components(g);
  std::size_t first = 0;
  for (const auto& s : subs)
    if (s.component == NameList{"V2"}) first = joint_space_params(g, s.family).size();
  std::cout << "NOT REPRODUCIBLE 10 | the 16 extra generators of the second three-variable example and the "
               "extra constraint of the five-variable example need graphs not given in the source; "
               "the V2 sub-problem has "
            << first << " joint parameters where the source states 12" << std::endl;
  return failed == 0 ? 0 : 1;
}
