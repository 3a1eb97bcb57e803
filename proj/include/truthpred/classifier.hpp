#pragma once

#include "truthpred/base_lang.hpp"
#include "truthpred/truth_operator.hpp"
#include "truthpred/universe.hpp"

#include <optional>
#include <string>
#include <vector>

namespace truthpred {

enum class Verdict { True, False, Undefined };

std::string to_string(Verdict v);

/// Whether the code belongs to the grounded sublanguage (truths or falsities).
/// Throws UnknownCode for codes outside the universe.
bool in_grounded_language(const GodelNumber& code, const OperatorResult& r, const Universe& u);

/// Throws NotInUniverse.
Verdict classify(const Sentence& s, const OperatorResult& r, const Universe& u);
Verdict classify(SentenceId id, const OperatorResult& r);

/// Verdict of T(#A) as the truth operator assigns it. When T(#A) is not a
/// member, the verdict follows from the operator's input read as a truth set:
/// true iff #A is in it, false iff A is false by it (#!A is in it, or, when
/// !A is not a member, A's parts make it false).
Verdict t_verdict(SentenceId id, const OperatorResult& r, const Universe& u);

/// Whether A <-> T(#A) is true. Uses the compound when it is a member and
/// otherwise compares the verdicts of A and T(#A). Empty when A is ungrounded.
std::optional<bool> t_biconditional_holds(const Sentence& a, const OperatorResult& r, const Universe& u);

struct AgreementReport {
  std::size_t checked = 0;
  std::vector<SentenceId> violations;
  bool ok() const { return violations.empty(); }
};

/// Compares the verdict of every T-free member with its base-language value.
AgreementReport base_agreement(const OperatorResult& r, const Universe& u,
                               const BaseLanguage& lang = bounded_arithmetic());

}  // namespace truthpred
