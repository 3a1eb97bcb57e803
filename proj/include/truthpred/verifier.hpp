#pragma once

#include "truthpred/code_set.hpp"
#include "truthpred/universe.hpp"

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace truthpred {

struct RuleOutcome {
  std::string rule;  // "r0" .. "r11"
  std::size_t checked = 0;
  std::optional<GodelNumber> counterexample;
  std::string detail;  // sentence text and failing half, when failed
  bool passed() const { return !counterexample.has_value(); }
};

struct RuleReport {
  std::vector<RuleOutcome> rules;  // r0 .. r11 in order
  std::string universe_fingerprint;
  std::string set_fingerprint;
  bool all_passed() const;
  const RuleOutcome& rule(const std::string& name) const;
};

struct TruthPair {
  CodeSet truths;
  CodeSet falsities;
  friend bool operator==(const TruthPair&, const TruthPair&) = default;
};

/// Conformance checks of the truth and falsity sets against the rules of the
/// truth predicate, plus an independent oracle for those sets.
///
/// Everything here reads the universe through the sentence trees; none of the
/// truth operator's own machinery is reused except where a check is explicitly
/// about the operator's output.
///
/// Quantified T-rules range over every member code n. When T(n) itself is not
/// a member, its membership is the one the T-atom rule dictates: true iff n is
/// in the input set, false iff #!A is, for A the sentence coded by n.
class Verifier {
 public:
  explicit Verifier(const Universe& u);

  const Universe& universe() const { return u_; }

  /// Runs the truth operator on `u_set` and checks every rule on its output.
  RuleReport verify_rules(const CodeSet& u_set) const;
  /// Checks every rule, each as a biconditional in both halves, on the given sets.
  RuleReport verify_rules_on(const CodeSet& truths, const CodeSet& falsities, const CodeSet& u_set) const;

  /// Least pair of sets closed under the rules read left-to-right, computed by
  /// chaotic iteration.
  TruthPair oracle(const CodeSet& u_set) const;

  // Lemma checks. Hypotheses are enforced with PreconditionViolation.
  bool disjointness(const CodeSet& u_set) const;
  bool consistency_preservation(const CodeSet& u_set) const;
  bool monotonicity(const CodeSet& smaller, const CodeSet& larger) const;
  /// `chain` must be strictly increasing and consistent.
  bool chain_union(std::span<const CodeSet> chain) const;

  bool consistent(const CodeSet& set) const;

  /// Samples members in random order with probability `density`, skipping any
  /// member whose negation partner is already chosen.
  CodeSet random_consistent_subset(std::mt19937_64& rng, double density) const;

  std::string fingerprint(const CodeSet& set) const;
  std::string fingerprint() const;

 private:
  struct Entry {
    SentenceKind kind;
    SentenceId a = Universe::npos, b = Universe::npos;
    SentenceId negation = Universe::npos;
    SentenceId t_atom = Universe::npos;  // T(#this)
    SentenceId named = Universe::npos;   // for T(n): the sentence coded by n
    bool t_free = false;
    bool base_true = false;
  };
  const Universe& u_;
  std::vector<Entry> entries_;
  SentenceId quantified_[4];
};

// Free-function forms that build a Verifier for one call.
RuleReport verify_rules(const CodeSet& u_set, const Universe& u);
bool verify_disjointness(const CodeSet& u_set, const Universe& u);
bool verify_consistency_preservation(const CodeSet& u_set, const Universe& u);
bool verify_monotonicity(const CodeSet& smaller, const CodeSet& larger, const Universe& u);
bool verify_chain_union(std::span<const CodeSet> chain, const Universe& u);
TruthPair oracle_classify(const Universe& u, const CodeSet& u_set);

/// Human-readable table, one row per rule.
std::string format_table(const RuleReport& report);
/// One "rule<TAB>pass|fail<TAB>counterexample-code" line per rule ("-" when passing).
std::string format_lines(const RuleReport& report);

}  // namespace truthpred
