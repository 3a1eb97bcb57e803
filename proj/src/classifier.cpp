#include "truthpred/classifier.hpp"

#include "truthpred/errors.hpp"
#include "truthpred/truth_operator.hpp"

namespace truthpred {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Undefined: return "undefined";
  }
  return {};
}

bool in_grounded_language(const GodelNumber& code, const OperatorResult& r, const Universe& u) {
  SentenceId id = u.id_of(code);
  return r.truths.contains(id) || r.falsities.contains(id);
}

Verdict classify(SentenceId id, const OperatorResult& r) {
  if (r.truths.contains(id)) return Verdict::True;
  if (r.falsities.contains(id)) return Verdict::False;
  return Verdict::Undefined;
}

Verdict classify(const Sentence& s, const OperatorResult& r, const Universe& u) {
  auto id = u.find(s);
  if (!id) throw NotInUniverse("sentence is not in the universe: " + render(s));
  return classify(*id, r);
}

Verdict t_verdict(SentenceId id, const OperatorResult& r, const Universe& u) {
  if (SentenceId atom = u.t_atom_of(id); atom != Universe::npos) return classify(atom, r);
  if (r.input.contains(id)) return Verdict::True;
  if (reads_false(id, r.input, u)) return Verdict::False;
  return Verdict::Undefined;
}

std::optional<bool> t_biconditional_holds(const Sentence& a, const OperatorResult& r, const Universe& u) {
  auto id = u.find(a);
  if (!id) throw NotInUniverse("sentence is not in the universe: " + render(a));
  const Verdict va = classify(*id, r);
  if (va == Verdict::Undefined) return std::nullopt;

  const Sentence compound = Sentence::binary(SentenceKind::Iff, a, Sentence::t_atom(a.code()));
  if (auto cid = u.find(compound)) return classify(*cid, r) == Verdict::True;
  return t_verdict(*id, r, u) == va;
}

AgreementReport base_agreement(const OperatorResult& r, const Universe& u, const BaseLanguage& lang) {
  AgreementReport report;
  for (SentenceId id = 0; id < u.size(); ++id) {
    const Sentence& s = u.sentence(id);
    if (!s.is_t_free()) continue;
    ++report.checked;
    const bool value = lang.evaluate(lower_to_base(s));
    const Verdict v = classify(id, r);
    if ((v == Verdict::True) != value || (v == Verdict::False) != !value) report.violations.push_back(id);
  }
  return report;
}

}  // namespace truthpred
