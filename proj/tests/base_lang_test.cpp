#include "truthpred/base_lang.hpp"
#include "truthpred/errors.hpp"
#include "truthpred/parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace truthpred;

namespace {

bool eval(const std::string& text) { return eval_base(parse_base_formula(text)); }

}  // namespace

TEST(BaseLanguage, EvaluatesAtoms) {
  EXPECT_TRUE(eval("0=0"));
  EXPECT_FALSE(eval("0<0"));
  EXPECT_TRUE(eval("1+2*3=7"));
  EXPECT_FALSE(eval("(1+2)*3=7"));
  EXPECT_TRUE(eval("S(S(0))=2"));
  EXPECT_TRUE(eval("3<2+2"));
  EXPECT_EQ(eval_term(parse_base_formula("12345678901234567890*10=0").lhs_term()),
            BigNat("123456789012345678900"));
}

TEST(BaseLanguage, EvaluatesConnectivesAndBoundedQuantifiers) {
  EXPECT_TRUE(eval("(0<0) -> (1=2)"));
  EXPECT_FALSE(eval("(0=0) <-> (0<0)"));
  EXPECT_TRUE(eval("(Ax<3)(x<3)"));
  EXPECT_FALSE(eval("(Ax<3)(x<2)"));
  EXPECT_TRUE(eval("(Ex<4)(x*x=4)"));
  EXPECT_FALSE(eval("(Ex<2)(x*x=4)"));
  // Empty range: universal true, existential false.
  EXPECT_TRUE(eval("(Ax<0)(0<0)"));
  EXPECT_FALSE(eval("(Ex<0)(0=0)"));
  EXPECT_TRUE(eval("(Ax<3)((Ey<4)(y=x+1))"));
  // Inner bound depends on the outer variable.
  EXPECT_FALSE(eval("(Ax<3)((Ey<x)(y+1=x))"));
  EXPECT_TRUE(eval("(Ax<3)((x=0) | ((Ey<x)(y+1=x)))"));
}

TEST(BaseLanguage, RejectsOpenFormulas) {
  EXPECT_THROW(eval("x=0"), OpenFormulaError);
  EXPECT_THROW(eval("(Ax<y)(x=x)"), OpenFormulaError);
}

TEST(BaseLanguage, NumericBoundIsEnforced) {
  BaseFormula f = parse_base_formula("(Ax<20)(x<20)");
  EXPECT_TRUE(eval_base(f));
  EXPECT_THROW(eval_base(f, BigNat(16)), NumericBoundError);
  EXPECT_TRUE(eval_base(f, BigNat(20)));

  BaseConfig cfg;
  cfg.seed_sentences = {"(Ax<20)(x<20)"};
  EXPECT_THROW(enumerate_base(cfg), NumericBoundError);
  cfg.numeric_bound = 32;
  EXPECT_EQ(enumerate_base(cfg).size(), 1u);
}

TEST(BaseLanguage, EnumeratesSeedsThenCompoundsInCodeOrder) {
  BaseConfig cfg;
  cfg.seed_sentences = {"0=0", "0<0", "0=0"};
  std::vector<BaseFormula> zero = enumerate_base(cfg);
  ASSERT_EQ(zero.size(), 2u);
  EXPECT_EQ(render(zero[0]), "0=0");
  EXPECT_EQ(render(zero[1]), "0<0");

  cfg.generate_depth = 1;
  std::vector<BaseFormula> one = enumerate_base(cfg);
  // 2 seeds, 2 negations, 4 binary connectives over 2x2 ordered pairs.
  ASSERT_EQ(one.size(), 2u + 2u + 4u * 2u * 2u);
  for (std::size_t i = 3; i < one.size(); ++i) EXPECT_LT(one[i - 1].code(), one[i].code());
  std::set<BigNat> codes;
  for (const auto& f : one) EXPECT_TRUE(codes.insert(f.code()).second);
}

TEST(BaseLanguage, EnumerationIsDeterministic) {
  BaseConfig cfg;
  cfg.seed_sentences = {"(Ex<3)(x+x=2)", "1<1", "2*2=4"};
  cfg.generate_depth = 1;
  auto a = enumerate_base(cfg), b = enumerate_base(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(BaseLanguage, BadSeedIsAParseError) {
  BaseConfig cfg;
  cfg.seed_sentences = {"0=0", "0=="};
  EXPECT_THROW(enumerate_base(cfg), ParseError);
}

TEST(BaseLanguage, SatisfiesClassicalClauses) {
  const char* pool[] = {"0=0", "0<0", "(Ax<3)(x<3)", "(Ex<4)(x*x=5)", "(Ex<3)((x=2) & (x+x=4))", "1+1=2",
                        "(Ax<4)((Ey<5)(y=x+1))"};
  std::vector<std::pair<BaseFormula, BaseFormula>> sample;
  for (auto a : pool)
    for (auto b : pool) sample.emplace_back(parse_base_formula(a), parse_base_formula(b));
  MaReport report = check_ma_properties(sample);
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.checks, 6 * sample.size());
}

TEST(BaseLanguage, InterfaceForwardsToEvaluator) {
  const BaseLanguage& lang = bounded_arithmetic();
  EXPECT_TRUE(lang.evaluate(parse_base_formula("2*3=6")));
  BaseConfig cfg;
  cfg.seed_sentences = {"0=0"};
  EXPECT_EQ(lang.enumerate(cfg).size(), 1u);
  EXPECT_EQ(&lang, &bounded_arithmetic());
}
