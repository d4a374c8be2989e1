#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace causal_implicits;

namespace {

Polynomial X(const std::string& tag) { return Polynomial(ParamId::aux(tag)); }

Polynomial random_poly(std::mt19937_64& rng, int vars, int terms, int max_exp) {
  Polynomial f;
  for (int k = 0; k < terms; ++k) {
    Polynomial m(Rational(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(1 + rng() % 4)));
    for (int v = 0; v < vars; ++v) m *= X(std::string(1, static_cast<char>('a' + v))).pow(rng() % (max_exp + 1));
    f += m;
  }
  return f;
}

}  // namespace

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(ParamId, TextForms) {
  auto g = ci_test::common_cause();
  auto p = joint_param(ci_test::at(g, {{"V2", 1}}), ci_test::at(g, {{"V1", 2}, {"V2", 1}, {"V3", 1}}));
  EXPECT_EQ(p.to_string(), "p[V2=1|V1=2,V3=1]");
  EXPECT_EQ(ci_test::pv(g, "121").to_string(), "p[|V1=1,V2=2,V3=1]");
  ParamId q(ModelQId{"V1", 1, Assignment({{"V3", 2}}), Assignment({{"U1", 1}})});
  EXPECT_EQ(q.to_string(), "q[V1=1|V3=2;U1=1]");
  EXPECT_EQ(ParamId(ModelRId{"U1", 2}).to_string(), "r[U1=2]");
  for (const auto& id : {p, q, ParamId(ModelRId{"U1", 2}), ParamId::aux("sat")})
    EXPECT_EQ(parse_param(id.to_string()), id);
}

TEST(ParamId, KindsOrderAuxFirst) {
  auto g = ci_test::common_cause();
  EXPECT_LT(ParamId::aux("z"), ParamId(ModelRId{"U", 1}));
  EXPECT_LT(ParamId(ModelQId{"V1", 1, {}, {}}), ParamId(ModelRId{"U", 1}));
  EXPECT_LT(ParamId(ModelRId{"U", 1}), ci_test::pv(g, "111"));
}

TEST(Polynomial, ArithmeticIdentities) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    auto f = random_poly(rng, 3, 4, 2);
    auto g = random_poly(rng, 3, 4, 2);
    auto h = random_poly(rng, 3, 3, 2);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f.pow(2), f * f);
    EXPECT_EQ(f.pow(0), Polynomial(1));
  }
}

TEST(Polynomial, DegreeAndVariables) {
  auto f = X("a") * X("b").pow(2) - X("c") + Polynomial(Rational(1, 2));
  EXPECT_EQ(f.total_degree(), 3u);
  EXPECT_EQ(f.variables(), (std::vector<ParamId>{ParamId::aux("a"), ParamId::aux("b"), ParamId::aux("c")}));
  EXPECT_TRUE(f.mentions_any([](const ParamId& p) { return p == ParamId::aux("c"); }));
  EXPECT_FALSE(f.mentions_any([](const ParamId& p) { return p.is_joint(); }));
}

TEST(Polynomial, MonicScalesLeadingCoefficient) {
  auto f = Rational(3) * X("a") - Polynomial(6);
  EXPECT_EQ(f.monic(), X("a") - Polynomial(2));
  EXPECT_TRUE(Polynomial().monic().is_zero());
}

TEST(Polynomial, CanonicalTextAndRoundTrip) {
  auto g = ci_test::common_cause();
  auto f = ci_test::P(ci_test::pv(g, "111")) * ci_test::P(ci_test::pv(g, "221")) -
           ci_test::P(ci_test::pv(g, "121")) * ci_test::P(ci_test::pv(g, "211"));
  EXPECT_EQ(f.to_string(),
            "p[|V1=1,V2=1,V3=1]*p[|V1=2,V2=2,V3=1] - p[|V1=1,V2=2,V3=1]*p[|V1=2,V2=1,V3=1]");
  EXPECT_EQ(parse_polynomial(f.to_string()), f);
  auto h = Rational(-3, 4) * X("a").pow(2) + Polynomial(1);
  EXPECT_EQ(h.to_string(), "-3/4*aux[a]^2 + 1");
  EXPECT_EQ(parse_polynomial(h.to_string()), h);
  EXPECT_EQ(parse_polynomial("aux[a] * aux[a] + 2*aux[b] - aux[b]*1"), X("a").pow(2) + X("b"));
  EXPECT_THROW(parse_polynomial(""), InputError);
  EXPECT_THROW(parse_polynomial("aux[a] +"), InputError);
}

TEST(Polynomial, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    auto f = random_poly(rng, 4, 5, 3);
    EXPECT_EQ(parse_polynomial(f.to_string()), f);
  }
}

TEST(MonomialOrder, LexAndGrevlex) {
  Monomial a = (X("a") * X("c").pow(2)).terms()[0].mono;
  Monomial b = (X("b").pow(3)).terms()[0].mono;
  Monomial c = (X("b") * X("c")).terms()[0].mono;
  EXPECT_GT(compare(MonomialOrder::lex(), a, b), 0);
  EXPECT_EQ(compare(MonomialOrder::grevlex(), a, b), -1);  // a*c^2 < b^3: c is the smallest variable
  EXPECT_GT(compare(MonomialOrder::grevlex(), a, c), 0);
  EXPECT_EQ(compare(MonomialOrder::lex(), a, a), 0);
}

TEST(MonomialOrder, BlockComparesEliminatedFirst) {
  auto order = MonomialOrder::block({ParamId::aux("c")});
  Monomial c = X("c").terms()[0].mono;
  Monomial ab = (X("a").pow(3) * X("b")).terms()[0].mono;
  EXPECT_GT(compare(order, c, ab), 0);
  EXPECT_LT(compare(MonomialOrder::grevlex(), c, ab), 0);
}

TEST(MonomialOrder, IsTotalAndMultiplicative) {
  std::mt19937_64 rng(3);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(),
                                    MonomialOrder::block({ParamId::aux("b"), ParamId::aux("d")})};
  auto mono = [&] {
    Polynomial m(1);
    for (char v : std::string("abcd")) m *= X(std::string(1, v)).pow(rng() % 3);
    return m.terms()[0].mono;
  };
  for (const auto& o : orders)
    for (int k = 0; k < 200; ++k) {
      Monomial x = mono(), y = mono(), z = mono();
      int c = compare(o, x, y);
      EXPECT_EQ(c, -compare(o, y, x));
      EXPECT_EQ(c == 0, x == y);
      EXPECT_EQ(c > 0, compare(o, x * z, y * z) > 0);
      EXPECT_GE(compare(o, x * z, x), 0);
    }
}
