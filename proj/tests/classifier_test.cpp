#include "support.hpp"

#include "truthpred/classifier.hpp"
#include "truthpred/errors.hpp"
#include "truthpred/fixpoint.hpp"
#include "truthpred/parser.hpp"
#include "truthpred/truth_operator.hpp"

#include <gtest/gtest.h>

using namespace truthpred;
using truthpred::test_support::f1;

namespace {

const OperatorResult& at_least_fixed_point() {
  static const OperatorResult r = apply_truth_operator(least_fixed_point(f1().empty_set(), f1()).final, f1());
  return r;
}

Verdict verdict(const char* text) { return classify(parse_sentence(text), at_least_fixed_point(), f1()); }

}  // namespace

TEST(Classifier, F1AtLeastFixedPoint) {
  EXPECT_EQ(verdict("T(785)"), Verdict::True);
  EXPECT_EQ(verdict("T(801)"), Verdict::False);
  EXPECT_EQ(verdict("Ex T(x)"), Verdict::True);
  EXPECT_EQ(verdict("Ax T(x)"), Verdict::False);
  EXPECT_EQ(verdict("Ex !T(x)"), Verdict::True);
  EXPECT_EQ(verdict("Ax !T(x)"), Verdict::False);
  EXPECT_EQ(verdict("0=0"), Verdict::True);
  EXPECT_EQ(verdict("0<0"), Verdict::False);
  EXPECT_EQ(verdict("(T(785)) & (Ax T(x))"), Verdict::False);
  EXPECT_EQ(verdict("(T(801)) <-> (0<0)"), Verdict::True);
}

TEST(Classifier, UndefinedIsAVerdict) {
  // At the empty set nothing about T is grounded.
  const Universe& u = f1();
  OperatorResult r = apply_truth_operator(u.empty_set(), u);
  EXPECT_EQ(classify(parse_sentence("T(785)"), r, u), Verdict::Undefined);
  EXPECT_EQ(classify(parse_sentence("Ex T(x)"), r, u), Verdict::Undefined);
  EXPECT_EQ(classify(parse_sentence("(Ex T(x)) | (0=0)"), r, u), Verdict::True);
  EXPECT_EQ(to_string(Verdict::Undefined), "undefined");
  EXPECT_THROW(classify(parse_sentence("T(17)"), r, u), NotInUniverse);
}

TEST(Classifier, GroundedLanguageMembership) {
  const Universe& u = f1();
  const OperatorResult& r = at_least_fixed_point();
  EXPECT_TRUE(in_grounded_language(GodelNumber(785), r, u));
  EXPECT_TRUE(in_grounded_language(GodelNumber(4), r, u));
  EXPECT_THROW(in_grounded_language(GodelNumber(17), r, u), UnknownCode);
  // Every T-atom of F1 names a sentence of S0, all of which get grounded.
  for (SentenceId id = 0; id < u.size(); ++id) {
    bool grounded = in_grounded_language(u.code(id), r, u);
    EXPECT_TRUE(grounded) << render(u.sentence(id));
    EXPECT_EQ(grounded, classify(id, r) != Verdict::Undefined);
  }
  OperatorResult first = apply_truth_operator(u.empty_set(), u);
  EXPECT_FALSE(in_grounded_language(GodelNumber(4), first, u));
}

TEST(Classifier, Exclusive) {
  const Universe& u = f1();
  const OperatorResult& r = at_least_fixed_point();
  EXPECT_FALSE(r.truths.intersects(r.falsities));
  // Negation closure of the grounded language where both codes are members.
  for (SentenceId id = 0; id < u.size(); ++id)
    if (SentenceId n = u.negation(id); n != Universe::npos)
      EXPECT_EQ(classify(id, r) == Verdict::Undefined, classify(n, r) == Verdict::Undefined);
}

TEST(Classifier, TVerdictFollowsInput) {
  const Universe& u = f1();
  const OperatorResult& r = at_least_fixed_point();
  EXPECT_EQ(t_verdict(u.id_of(GodelNumber(785)), r, u), Verdict::True);
  EXPECT_EQ(t_verdict(u.id_of(GodelNumber(801)), r, u), Verdict::False);
  // (0=0) | (0<0) has no T-atom in F1; its verdict comes from the input set.
  SentenceId compound = u.id_of(parse_sentence("(0=0) | (0<0)").code());
  EXPECT_EQ(t_verdict(compound, r, u), Verdict::True);
  SentenceId t_compound = u.id_of(parse_sentence("(T(785)) | (T(801))").code());
  EXPECT_EQ(t_verdict(t_compound, r, u), Verdict::True);
}

TEST(Classifier, TBiconditional) {
  const Universe& u = f1();
  const OperatorResult& r = at_least_fixed_point();
  EXPECT_EQ(t_biconditional_holds(parse_sentence("0=0"), r, u), std::optional<bool>(true));
  EXPECT_EQ(t_biconditional_holds(parse_sentence("0<0"), r, u), std::optional<bool>(true));

  OperatorResult empty = apply_truth_operator(u.empty_set(), u);
  EXPECT_EQ(t_biconditional_holds(parse_sentence("Ex T(x)"), empty, u), std::nullopt);

  std::size_t grounded = 0;
  for (const auto& s : u.sentences()) {
    auto holds = t_biconditional_holds(s, r, u);
    if (!holds) continue;
    ++grounded;
    EXPECT_TRUE(*holds) << render(s);
  }
  EXPECT_EQ(grounded, r.truths.count() + r.falsities.count());
}

TEST(Classifier, BaseAgreement) {
  const Universe& u = f1();
  AgreementReport report = base_agreement(at_least_fixed_point(), u);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.checked, 20u);
  // Already at the empty set every T-free sentence is decided.
  EXPECT_TRUE(base_agreement(apply_truth_operator(u.empty_set(), u), u).ok());

  // A corrupted result is caught.
  OperatorResult broken = at_least_fixed_point();
  broken.truths.erase(u.id_of(GodelNumber(785)));
  EXPECT_FALSE(base_agreement(broken, u).ok());
}
