#include "support.hpp"

#include "truthpred/errors.hpp"
#include "truthpred/parser.hpp"
#include "truthpred/truth_operator.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace truthpred;
using truthpred::test_support::f1;

namespace {

SentenceId id(const Universe& u, const char* text) { return u.id_of(parse_sentence(text).code()); }

CodeSet set_of(const Universe& u, std::initializer_list<const char*> texts) {
  CodeSet out(u.size());
  for (auto t : texts) out.insert(id(u, t));
  return out;
}

CodeSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  CodeSet out(n);
  for (SentenceId i = 0; i < n; ++i)
    if (coin(rng)) out.insert(i);
  return out;
}

}  // namespace

TEST(TAtomSets, AffirmedAndDenied) {
  const Universe& u = f1();
  EXPECT_TRUE(affirmed_t_atoms(u.empty_set(), u).empty());
  EXPECT_EQ(affirmed_t_atoms(set_of(u, {"0=0"}), u), set_of(u, {"T(785)"}));
  EXPECT_TRUE(denied_t_atoms(u.empty_set(), u).empty());
  EXPECT_EQ(denied_t_atoms(set_of(u, {"!(0<0)"}), u), set_of(u, {"!(T(801))"}));
  EXPECT_TRUE(denied_t_atoms(set_of(u, {"0=0"}), u).empty());
  // No T-atom for a compound in F1: nothing to affirm.
  EXPECT_TRUE(affirmed_t_atoms(set_of(u, {"(0=0) | (0<0)"}), u).empty());
  EXPECT_FALSE(has_negated_member(set_of(u, {"0=0", "T(785)"}), u));
  EXPECT_TRUE(has_negated_member(set_of(u, {"!(T(785))"}), u));
}

TEST(InitialStage, FourCases) {
  const Universe& u = f1();
  EXPECT_EQ(initial_stage(u.empty_set(), u), u.true_base());

  CodeSet expected = u.true_base() | set_of(u, {"T(785)", "Ex T(x)", "!(Ax !T(x))"});
  EXPECT_EQ(initial_stage(set_of(u, {"0=0"}), u), expected);

  CodeSet third = initial_stage(set_of(u, {"0=0", "!(0<0)"}), u);
  EXPECT_TRUE(set_of(u, {"!(T(801))", "!(Ax T(x))", "Ex !T(x)", "T(785)", "Ex T(x)", "!(Ax !T(x))"}).is_subset_of(third));
  EXPECT_EQ(third.count(), u.true_base().count() + 6);

  CodeSet full = initial_stage(u.full_set(), u);
  for (auto q : {"Ex T(x)", "Ax T(x)", "Ex !T(x)", "Ax !T(x)", "!(Ex T(x))", "!(Ax T(x))", "!(Ex !T(x))",
                 "!(Ax !T(x))"})
    EXPECT_TRUE(full.contains(id(u, q))) << q;
}

TEST(InitialStage, NegatedMemberWithoutTAtomStillSelectsThirdCase) {
  // The seed's only member is a negation whose own T-atom is not in F1.
  const Universe& u = f1();
  CodeSet seed = set_of(u, {"!(Ex T(x))"});
  ASSERT_EQ(u.t_atom_of(id(u, "!(Ex T(x))")), Universe::npos);
  CodeSet stage = initial_stage(seed, u);
  EXPECT_TRUE(stage.contains(id(u, "!(Ax T(x))")));
  EXPECT_TRUE(stage.contains(id(u, "Ex !T(x)")));
  EXPECT_TRUE(stage.contains(id(u, "!(T(3))")));
}

TEST(ConnectiveRules, FromEmptyStageNothing) {
  const Universe& u = f1();
  for (int k = 1; k <= kConnectiveRules; ++k) EXPECT_TRUE(connective_rule(u.empty_set(), k, u).empty()) << k;
  EXPECT_THROW(connective_rule(u.empty_set(), 0, u), InvalidRule);
  EXPECT_THROW(connective_rule(u.empty_set(), 10, u), InvalidRule);
}

TEST(ConnectiveRules, DisjunctionsOfATrueSentence) {
  const Universe& u = f1();
  CodeSet out = connective_rule(set_of(u, {"0=0"}), 1, u);
  // "0=0" on either side of each of the 18 atoms, counted once for itself.
  EXPECT_EQ(out.count(), 35u);
  out.for_each([&](SentenceId i) {
    const Sentence& s = u.sentence(i);
    ASSERT_EQ(s.kind(), SentenceKind::Or);
    EXPECT_TRUE(render(s.left()) == "0=0" || render(s.right()) == "0=0");
  });
}

TEST(ConnectiveRules, EachRuleOnAHandBuiltUniverse) {
  std::vector<Sentence> sentences;
  for (auto t : {"0=0", "!(0=0)", "0<0", "!(0<0)", "!(!(0=0))", "(0=0) | (0<0)", "!((0=0) | (0<0))",
                 "(0=0) & (0<0)", "!((0=0) & (0<0))", "(0=0) -> (0<0)", "!((0=0) -> (0<0))", "(0=0) <-> (0<0)",
                 "!((0=0) <-> (0<0))", "(0<0) <-> (0<0)", "!((0<0) <-> (0<0))"})
    sentences.push_back(parse_sentence(t));
  Universe u = Universe::from_sentences(sentences);
  CodeSet stage = set_of(u, {"0=0", "!(0<0)"});
  EXPECT_EQ(connective_rule(stage, 1, u), set_of(u, {"(0=0) | (0<0)"}));
  EXPECT_TRUE(connective_rule(stage, 2, u).empty());
  EXPECT_TRUE(connective_rule(stage, 3, u).empty());
  EXPECT_EQ(connective_rule(stage, 4, u), set_of(u, {"(0<0) <-> (0<0)"}));
  EXPECT_TRUE(connective_rule(stage, 5, u).empty());
  EXPECT_EQ(connective_rule(stage, 6, u), set_of(u, {"!((0=0) & (0<0))"}));
  EXPECT_EQ(connective_rule(stage, 7, u), set_of(u, {"!((0=0) -> (0<0))"}));
  EXPECT_EQ(connective_rule(stage, 8, u), set_of(u, {"!((0=0) <-> (0<0))"}));
  EXPECT_EQ(connective_rule(stage, 9, u), set_of(u, {"!(!(0=0))"}));
}

TEST(NextStage, ExtensiveAndMonotone) {
  const Universe& u = f1();
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    CodeSet small = random_subset(rng, u.size(), 0.05);
    CodeSet large = small | random_subset(rng, u.size(), 0.05);
    CodeSet a = next_stage(small, u), b = next_stage(large, u);
    EXPECT_TRUE(small.is_subset_of(a));
    EXPECT_TRUE(a.is_subset_of(b));
  }
}

TEST(NextStage, EmptyWhenNothingIsTrue) {
  Universe u = Universe::build(UniverseParams{});
  ASSERT_TRUE(u.true_base().empty());
  EXPECT_TRUE(next_stage(u.empty_set(), u).empty());
}

TEST(TruthOperator, F1FromEmptySet) {
  const Universe& u = f1();
  OperatorResult r = apply_truth_operator(u.empty_set(), u);
  EXPECT_TRUE(u.true_base().is_subset_of(r.truths));
  EXPECT_TRUE(r.truths.contains(id(u, "(0=0) | (Ex T(x))")));
  r.truths.for_each([&](SentenceId i) { EXPECT_NE(u.kind(i), SentenceKind::TAtom); });
  // W (11), disjunctions with 0=0 (35 less 3 T-free), implications into 0=0
  // or out of 0<0 (35 less 3 T-free).
  EXPECT_EQ(r.truths.count(), 11u + 32u + 32u);
  EXPECT_EQ(r.rounds, 2u);
  EXPECT_EQ(r.input, u.empty_set());
}

TEST(TruthOperator, AdditionsPartitionTheTruthSet) {
  const Universe& u = f1();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    CodeSet seed = random_subset(rng, u.size(), 0.02);
    OperatorResult r = apply_truth_operator(seed, u);
    CodeSet seen(u.size());
    std::size_t last_round = 0;
    for (const auto& a : r.additions) {
      EXPECT_FALSE(seen.contains(a.id));
      EXPECT_GE(a.round, last_round);
      EXPECT_EQ(a.rule == 0, a.round == 0);
      last_round = a.round;
      seen.insert(a.id);
    }
    EXPECT_EQ(seen, r.truths);
    EXPECT_TRUE(initial_stage(seed, u).is_subset_of(r.truths));
    EXPECT_LE(r.rounds, u.size());
    EXPECT_GE(r.rounds, 1u);
    EXPECT_EQ(next_stage(r.truths, u), r.truths);
  }
}

TEST(Falsities, DefinedThroughNegation) {
  const Universe& u = f1();
  OperatorResult r = apply_truth_operator(u.empty_set(), u);
  EXPECT_TRUE(r.falsities.contains(id(u, "0<0")));
  for (auto q : {"Ex T(x)", "Ax T(x)", "Ex !T(x)", "Ax !T(x)"}) EXPECT_FALSE(r.falsities.contains(id(u, q)));
  for (SentenceId i = 0; i < u.size(); ++i)
    if (SentenceId n = u.negation(i); n != Universe::npos) EXPECT_EQ(r.falsities.contains(i), r.truths.contains(n));
  EXPECT_EQ(falsity_set(u.empty_set(), u), r.falsities);
}

TEST(Falsities, TopLayerReadsOffParts) {
  // Binaries of F1 have no negation in F1; their falsity follows from the parts.
  const Universe& u = f1();
  OperatorResult r = apply_truth_operator(u.empty_set(), u);
  ASSERT_EQ(u.negation(id(u, "(0<0) | (0<0)")), Universe::npos);
  EXPECT_TRUE(r.falsities.contains(id(u, "(0<0) | (0<0)")));
  EXPECT_TRUE(r.falsities.contains(id(u, "(0=0) -> (0<0)")));
  EXPECT_TRUE(r.falsities.contains(id(u, "(0<0) & (Ex T(x))")));
  EXPECT_FALSE(r.falsities.contains(id(u, "(0=0) & (Ex T(x))")));
  EXPECT_FALSE(r.truths.intersects(r.falsities));
}
