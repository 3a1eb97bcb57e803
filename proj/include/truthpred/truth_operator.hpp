#pragma once

#include "truthpred/code_set.hpp"
#include "truthpred/universe.hpp"

#include <cstddef>
#include <vector>

namespace truthpred {

/// A code that entered the truth set, with the round it entered in and the
/// rule that produced it (0 for the initial stage, 1..9 for connective rules).
struct RoundAddition {
  std::size_t round;
  int rule;
  SentenceId id;
};

struct OperatorResult {
  CodeSet input;       // the set the operator was applied to
  CodeSet truths;      // the closed truth set
  CodeSet falsities;   // codes whose negation is grounded true
  std::size_t rounds;  // connective rounds run, including the final empty one
  std::vector<RoundAddition> additions;
};

/// T-atoms T(#A) for members A of `u_set` whose T-atom is in the universe.
CodeSet affirmed_t_atoms(const CodeSet& u_set, const Universe& u);

/// Negated T-atoms !(T(#A)) for every !(A) in `u_set`, as far as they are in the universe.
CodeSet denied_t_atoms(const CodeSet& u_set, const Universe& u);

/// Whether `u_set` contains some negation !(A). This is the exact condition
/// for the untruncated set of denied T-atoms to be nonempty.
bool has_negated_member(const CodeSet& u_set, const Universe& u);

/// The initial stage: true base sentences plus the T-atoms and quantified
/// T-sentences that `u_set` grounds, by the four cases empty / proper without
/// negated member / proper with negated member / everything.
CodeSet initial_stage(const CodeSet& u_set, const Universe& u);

/// Number of connective rules.
inline constexpr int kConnectiveRules = 9;

/// Compounds of the universe that connective rule `rule` (1..9) grounds from
/// `stage`:
///   1 A|B: A or B         5 !(A|B): !A and !B
///   2 A&B: A and B        6 !(A&B): !A or !B
///   3 A->B: !A or B       7 !(A->B): A and !B
///   4 A<->B: A,B or !A,!B 8 !(A<->B): A,!B or !A,B
///                         9 !!A: A
/// Throws InvalidRule outside 1..9.
CodeSet connective_rule(const CodeSet& stage, int rule, const Universe& u);

/// stage united with every connective rule applied to it.
CodeSet next_stage(const CodeSet& stage, const Universe& u);

/// Runs next_stage from the initial stage until a round adds nothing.
OperatorResult apply_truth_operator(const CodeSet& u_set, const Universe& u);

/// Falsity set of `u_set` (computed from the closed truth set).
CodeSet falsity_set(const CodeSet& u_set, const Universe& u);

/// Falsities determined by a closed truth set. A member whose negation is in
/// the universe is false iff that negation is true; for a top-layer member
/// without negation the same condition is read off its immediate parts.
CodeSet falsities_from_truths(const CodeSet& truths, const Universe& u);
/// Membership of one code in falsities_from_truths.
bool reads_false(SentenceId id, const CodeSet& truths, const Universe& u);

}  // namespace truthpred
