#include <gtest/gtest.h>

#include "support.hpp"

using namespace causal_implicits;
using ci_test::at;
using ci_test::P;
using ci_test::pv;

namespace {

Variable obs(const std::string& n, int card = 2) { return {n, card, VariableKind::observed}; }
Variable hid(const std::string& n, int card = 2) { return {n, card, VariableKind::hidden}; }

ModelPoint uniform(const CausalGraph& g) {
  ModelPoint m;
  for (const auto& id : model_params(g)) {
    const std::string& var = id.kind() == ParamId::Kind::model_q ? id.as_q().var : id.as_r().var;
    m[id] = Rational(1, g.cardinality(var));
  }
  return m;
}

Polynomial minor(const CausalGraph& g) {
  auto p = [&](const char* d) { return P(pv(g, d)); };
  return p("111") * p("221") - p("121") * p("211");
}

}  // namespace

TEST(RandomModel, DeterministicAndNormalized) {
  auto g = ci_test::confounded_chain();
  auto a = random_model(g, 42), b = random_model(g, 42), c = random_model(g, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_NO_THROW(validate_point(g, a));
  for (const auto& [id, q] : a) {
    EXPECT_GT(q, 0);
    EXPECT_LE(q.get_den(), 1000 * 1000);
  }
}

TEST(ValidatePoint, RejectsBadPoints) {
  auto g = ci_test::common_cause();
  auto m = random_model(g, 1);
  auto missing = m;
  missing.erase(missing.begin());
  EXPECT_THROW(validate_point(g, missing), MissingParameterError);
  auto off = m;
  off.begin()->second += Rational(1, 100);
  EXPECT_THROW(validate_point(g, off), InputError);
}

TEST(ExactDistribution, SumsToOne) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = ci_test::random_graph(seed, 2, 4, 1, 2);
    auto m = random_model(g, seed);
    for (const auto& r : all_interventions(g)) {
      auto t = exact_distribution(g, m, r.t);
      EXPECT_EQ(t.total(), 1);
      EXPECT_NO_THROW(validate_table(g, t));
    }
  }
}

TEST(ExactDistribution, UniformCptsGiveUniformTable) {
  auto g = ci_test::confounded_chain();
  auto t = exact_distribution(g, uniform(g), {});
  for (const auto& [v, p] : t.entries) EXPECT_EQ(p, Rational(1, 16));
}

TEST(ExactDistribution, InterventionLeavesOneRow) {
  // Chain V3 -> V2 -> V1 with T = {V2, V3}: P_t(v1) = q^1(v1 | v2).
  CausalGraph g({obs("V1"), obs("V2"), obs("V3")}, {{"V3", "V2"}, {"V2", "V1"}});
  auto m = random_model(g, 9);
  auto t = at(g, {{"V2", 2}, {"V3", 1}});
  auto table = exact_distribution(g, m, t);
  for (int x = 1; x <= 2; ++x)
    EXPECT_EQ(table.entries.at(at(g, {{"V1", x}})), m.at(ParamId(ModelQId{"V1", x, at(g, {{"V2", 2}}), {}})));
}

TEST(ExactDistribution, DeterministicChildrenExposeMixtureWeights) {
  CausalGraph g({obs("A"), obs("B"), hid("U")}, {{"U", "A"}, {"U", "B"}});
  ModelPoint m;
  for (const char* n : {"A", "B"})
    for (int u = 1; u <= 2; ++u)
      for (int x = 1; x <= 2; ++x)
        m[ParamId(ModelQId{n, x, {}, Assignment({{"U", u}})})] = x == u ? 1 : 0;
  m[ParamId(ModelRId{"U", 1})] = Rational(3, 10);
  m[ParamId(ModelRId{"U", 2})] = Rational(7, 10);
  auto t = exact_distribution(g, m, {});
  EXPECT_EQ(t.entries.at(at(g, {{"A", 1}, {"B", 1}})), Rational(3, 10));
  EXPECT_EQ(t.entries.at(at(g, {{"A", 2}, {"B", 2}})), Rational(7, 10));
  EXPECT_EQ(t.entries.at(at(g, {{"A", 1}, {"B", 2}})), 0);
}

TEST(ExactDistribution, RejectsTotalIntervention) {
  auto g = ci_test::common_cause();
  EXPECT_THROW(exact_distribution(g, random_model(g, 1), at(g, {{"V1", 1}, {"V2", 1}, {"V3", 1}})),
               PreconditionError);
}

TEST(Evaluate, Examples) {
  auto g = ci_test::common_cause();
  auto tables = exact_distributions(g, random_model(g, 3), {{}});
  EXPECT_EQ(evaluate(Polynomial(), tables), 0);
  EXPECT_EQ(evaluate(minor(g), tables), 0);
  // V1, V2 perfectly correlated given V3 = 1: the minor is (1/8)^2 - 0.
  DistributionTable xor_table;
  for (const auto& v : all_assignments(g, g.observed()))
    xor_table.entries[v] = *v.get("V1") == *v.get("V2") ? Rational(1, 4) : Rational(0);
  EXPECT_EQ(evaluate(minor(g), {xor_table}), Rational(1, 16));
  EXPECT_THROW(evaluate(P(pv(g, "111", at(g, {{"V3", 1}}))), tables), MissingParameterError);
  EXPECT_THROW(evaluate(P(ParamId(ModelRId{"U", 1})), tables), MissingParameterError);
}

TEST(Evaluate, IsLinear) {
  auto g = ci_test::common_cause();
  auto tables = exact_distributions(g, random_model(g, 5), all_interventions(g));
  auto k = kernel_eq19(g);
  const auto& gens = k.ideal.generators();
  for (std::size_t i = 0; i + 1 < gens.size(); i += 7) {
    EXPECT_EQ(evaluate(gens[i] + gens[i + 1], tables), evaluate(gens[i], tables) + evaluate(gens[i + 1], tables));
    EXPECT_EQ(evaluate(gens[i] * gens[i + 1], tables), evaluate(gens[i], tables) * evaluate(gens[i + 1], tables));
  }
}

TEST(Check, ModelDataPassesOwnKernelExactly) {
  auto g = ci_test::common_cause();
  auto k = kernel_direct(g, {{}});
  auto report = check(k, exact_distributions(g, random_model(g, 8), k.requests));
  EXPECT_TRUE(report.all_pass);
  EXPECT_TRUE(report.exact);
  EXPECT_EQ(report.tolerance, 0.0);
  EXPECT_EQ(report.results.size(), k.ideal.generators().size());
}

TEST(Check, EmptyConstraintSetIsVacuous) {
  ConstraintSet empty;
  auto report = check(empty, {});
  EXPECT_TRUE(report.all_pass);
  EXPECT_TRUE(report.vacuous);
}

TEST(Check, PerturbedTableFails) {
  auto g = ci_test::common_cause();
  auto k = kernel_prop1(g, {});
  auto table = exact_distribution(g, random_model(g, 12), {});
  table.entries.begin()->second += Rational(1, 1000);
  Rational total = table.total();
  for (auto& [v, p] : table.entries) p /= total;
  table.mode = DistributionTable::Mode::empirical;
  auto report = check(k, {table}, 1e-6);
  EXPECT_FALSE(report.all_pass);
  EXPECT_FALSE(report.exact);
  EXPECT_EQ(report.tolerance, 1e-6);
}

TEST(Check, EmpiricalToleranceAndNegativeTolerance) {
  auto g = ci_test::common_cause();
  auto k = kernel_prop1(g, {});
  auto table = exact_distribution(g, random_model(g, 13), {});
  table.mode = DistributionTable::Mode::empirical;
  EXPECT_TRUE(check(k, {table}).all_pass);
  EXPECT_THROW(check(k, {table}, -1), InputError);
}

TEST(ValidateTable, RequiresFullSupportAndNormalization) {
  auto g = ci_test::common_cause();
  auto table = exact_distribution(g, random_model(g, 2), {});
  auto missing = table;
  missing.entries.erase(missing.entries.begin());
  EXPECT_THROW(validate_table(g, missing), MissingParameterError);
  auto scaled = table;
  for (auto& [v, p] : scaled.entries) p *= 2;
  EXPECT_THROW(validate_table(g, scaled), InputError);
  auto negative = table;
  negative.entries.begin()->second = -negative.entries.begin()->second;
  EXPECT_THROW(validate_table(g, negative), InputError);
  auto near = table;
  near.mode = DistributionTable::Mode::empirical;
  near.entries.begin()->second += Rational(1, 10000000);
  EXPECT_NO_THROW(validate_table(g, near));
  near.mode = DistributionTable::Mode::exact;
  EXPECT_THROW(validate_table(g, near), InputError);
}

TEST(Member, Examples) {
  auto g = ci_test::common_cause();
  auto k = kernel_direct(g, {{}});
  for (const auto& f : k.ideal.generators()) EXPECT_TRUE(member(f, k));
  EXPECT_TRUE(member(marginal_sum(g, {}, {}) - 1, k));
  EXPECT_TRUE(member(minor(g), k));
  // A linear form that differs between two model points cannot be a constraint.
  auto f = P(pv(g, "111")) - P(pv(g, "222"));
  auto a = exact_distributions(g, random_model(g, 1), {{}});
  auto b = exact_distributions(g, random_model(g, 2), {{}});
  ASSERT_NE(evaluate(f, a), evaluate(f, b));
  EXPECT_FALSE(member(f, k));
}

TEST(RelationIdentities, HoldOnExactTables) {
  auto g = ci_test::confounded_chain();
  auto all = all_interventions(g);
  std::size_t bad = 0, checked = 0;
  for (int k = 0; k < 10; ++k) {
    auto tables = exact_distributions(g, random_model(g, 900 + static_cast<std::uint64_t>(k)), all);
    for (const auto& r : all) {
      if (auto rel = lemma2_relation(g, r.t))
        for (const auto& f : *rel) {
          ++checked;
          if (evaluate(f, tables) != 0) ++bad;
        }
      for (const auto& c : all)
        if (lemma3_applies(g, r.t, c.t))
          for (const auto& f : lemma3_generators(g, r.t, c.t)) {
            ++checked;
            if (evaluate(f, tables) != 0) ++bad;
          }
    }
  }
  EXPECT_GT(checked, 0u);
  EXPECT_EQ(bad, 0u);
}
