#include "truthpred/truth_operator.hpp"

#include "truthpred/errors.hpp"

#include <array>
#include <stdexcept>

namespace truthpred {

namespace {

constexpr SentenceKind kQuantifiedKinds[] = {SentenceKind::ExistsT, SentenceKind::ForallT,
                                             SentenceKind::ExistsNotT, SentenceKind::ForallNotT};

void insert_if_present(CodeSet& set, SentenceId id) {
  if (id != Universe::npos) set.insert(id);
}

// Membership of !(id) in `stage`; absent negations are never members.
bool negation_in(const CodeSet& stage, const Universe& u, SentenceId id) {
  SentenceId n = u.negation(id);
  return n != Universe::npos && stage.contains(n);
}

bool rule_applies(const CodeSet& g, const Universe& u, int rule, SentenceId id) {
  const SentenceKind kind = u.kind(id);
  if (rule <= 4) {
    static constexpr SentenceKind kPositive[] = {SentenceKind::Or, SentenceKind::And, SentenceKind::Implies,
                                                 SentenceKind::Iff};
    if (kind != kPositive[rule - 1]) return false;
    const SentenceId a = u.left(id), b = u.right(id);
    switch (rule) {
      case 1: return g.contains(a) || g.contains(b);
      case 2: return g.contains(a) && g.contains(b);
      case 3: return negation_in(g, u, a) || g.contains(b);
      case 4: return (g.contains(a) && g.contains(b)) || (negation_in(g, u, a) && negation_in(g, u, b));
    }
    return false;
  }
  if (kind != SentenceKind::Not) return false;
  const SentenceId inner = u.child(id);
  const SentenceKind inner_kind = u.kind(inner);
  if (rule == 9) return inner_kind == SentenceKind::Not && g.contains(u.child(inner));

  static constexpr SentenceKind kNegated[] = {SentenceKind::Or, SentenceKind::And, SentenceKind::Implies,
                                              SentenceKind::Iff};
  if (inner_kind != kNegated[rule - 5]) return false;
  const SentenceId a = u.left(inner), b = u.right(inner);
  switch (rule) {
    case 5: return negation_in(g, u, a) && negation_in(g, u, b);
    case 6: return negation_in(g, u, a) || negation_in(g, u, b);
    case 7: return g.contains(a) && negation_in(g, u, b);
    case 8: return (g.contains(a) && negation_in(g, u, b)) || (negation_in(g, u, a) && g.contains(b));
  }
  return false;
}

}  // namespace

CodeSet affirmed_t_atoms(const CodeSet& u_set, const Universe& u) {
  CodeSet out(u.size());
  u_set.for_each([&](SentenceId id) { insert_if_present(out, u.t_atom_of(id)); });
  return out;
}

CodeSet denied_t_atoms(const CodeSet& u_set, const Universe& u) {
  CodeSet out(u.size());
  u_set.for_each([&](SentenceId id) {
    if (u.kind(id) != SentenceKind::Not) return;
    SentenceId atom = u.t_atom_of(u.child(id));
    if (atom != Universe::npos) insert_if_present(out, u.negation(atom));
  });
  return out;
}

bool has_negated_member(const CodeSet& u_set, const Universe& u) {
  bool found = false;
  u_set.for_each([&](SentenceId id) { found = found || u.kind(id) == SentenceKind::Not; });
  return found;
}

CodeSet initial_stage(const CodeSet& u_set, const Universe& u) {
  CodeSet out = u.true_base();
  if (u_set.empty()) return out;

  auto add = [&](SentenceKind kind, bool negated) {
    SentenceId q = u.quantified(kind);
    if (q == Universe::npos) return;
    insert_if_present(out, negated ? u.negation(q) : q);
  };

  out |= affirmed_t_atoms(u_set, u);
  if (u_set.is_full()) {
    out |= denied_t_atoms(u_set, u);
    for (SentenceKind kind : kQuantifiedKinds) {
      add(kind, false);
      add(kind, true);
    }
    return out;
  }
  add(SentenceKind::ExistsT, false);
  add(SentenceKind::ForallNotT, true);
  if (has_negated_member(u_set, u)) {
    out |= denied_t_atoms(u_set, u);
    add(SentenceKind::ForallT, true);
    add(SentenceKind::ExistsNotT, false);
  }
  return out;
}

CodeSet connective_rule(const CodeSet& stage, int rule, const Universe& u) {
  if (rule < 1 || rule > kConnectiveRules) throw InvalidRule("connective rule must be in 1..9, got " + std::to_string(rule));
  CodeSet out(u.size());
  for (SentenceId id = 0; id < u.size(); ++id)
    if (rule_applies(stage, u, rule, id)) out.insert(id);
  return out;
}

CodeSet next_stage(const CodeSet& stage, const Universe& u) {
  CodeSet out = stage;
  for (int rule = 1; rule <= kConnectiveRules; ++rule) out |= connective_rule(stage, rule, u);
  return out;
}

OperatorResult apply_truth_operator(const CodeSet& u_set, const Universe& u) {
  OperatorResult result{u_set, initial_stage(u_set, u), CodeSet(u.size()), 0, {}};
  result.truths.for_each([&](SentenceId id) { result.additions.push_back({0, 0, id}); });

  for (std::size_t round = 1;; ++round) {
    CodeSet added(u.size());
    std::array<CodeSet, kConnectiveRules> produced;
    for (int rule = 1; rule <= kConnectiveRules; ++rule) {
      produced[rule - 1] = connective_rule(result.truths, rule, u) - result.truths;
      added |= produced[rule - 1];
    }
    result.rounds = round;
    if (added.empty()) break;
    added.for_each([&](SentenceId id) {
      int rule = 1;
      while (!produced[rule - 1].contains(id)) ++rule;
      result.additions.push_back({round, rule, id});
    });
    result.truths |= added;
  }
  result.falsities = falsities_from_truths(result.truths, u);
  return result;
}

CodeSet falsity_set(const CodeSet& u_set, const Universe& u) { return apply_truth_operator(u_set, u).falsities; }

bool reads_false(SentenceId id, const CodeSet& truths, const Universe& u) {
  if (SentenceId n = u.negation(id); n != Universe::npos) return truths.contains(n);
  switch (u.kind(id)) {
    case SentenceKind::Not: return truths.contains(u.child(id));
    case SentenceKind::Or: return reads_false(u.left(id), truths, u) && reads_false(u.right(id), truths, u);
    case SentenceKind::And: return reads_false(u.left(id), truths, u) || reads_false(u.right(id), truths, u);
    case SentenceKind::Implies: return truths.contains(u.left(id)) && reads_false(u.right(id), truths, u);
    case SentenceKind::Iff:
      return (truths.contains(u.left(id)) && reads_false(u.right(id), truths, u)) ||
             (reads_false(u.left(id), truths, u) && truths.contains(u.right(id)));
    case SentenceKind::BaseAtom: return !u.true_base().contains(id);
    default:
      // The builder always adds negations of T-atoms and quantified T-sentences.
      throw std::logic_error("atom without negation in universe: " + render(u.sentence(id)));
  }
}

CodeSet falsities_from_truths(const CodeSet& truths, const Universe& u) {
  CodeSet out(u.size());
  for (SentenceId id = 0; id < u.size(); ++id)
    if (reads_false(id, truths, u)) out.insert(id);
  return out;
}

}  // namespace truthpred
