#pragma once

#include "truthpred/base_lang.hpp"
#include "truthpred/code_set.hpp"
#include "truthpred/sentence.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace truthpred {

/// Connectives used when closing the atom layer. Negation is mandatory.
class ConnectiveSet {
 public:
  static ConnectiveSet all() { return ConnectiveSet(kAll); }
  static ConnectiveSet negation_only() { return ConnectiveSet(kNot); }
  /// Comma-separated subset of not,or,and,implies,iff. Throws std::invalid_argument.
  static ConnectiveSet parse(const std::string& list);

  bool allows(SentenceKind kind) const;
  ConnectiveSet with(SentenceKind kind) const;
  std::string to_string() const;
  friend bool operator==(const ConnectiveSet&, const ConnectiveSet&) = default;

 private:
  static constexpr unsigned kNot = 1, kAll = 31;
  explicit ConnectiveSet(unsigned mask) : mask_(mask) {}
  unsigned mask_;
};

struct UniverseParams {
  BaseConfig base;
  unsigned depth = 1;    // connective depth over the atom layer
  unsigned t_depth = 0;  // connective depth of the sentences that receive T-atoms
  std::size_t budget = 200000;
  ConnectiveSet connectives = ConnectiveSet::all();
};

/// Finite truncation of the set of codes of the extended language.
///
/// Construction:
///   base layer  = base sentences from the base language, closed under subsentences;
///   S0          = base layer plus the four quantified T-sentences;
///   sources     = S0 closed under connectives to depth t_depth;
///   atom layer  = S0, plus T(#A) and !(T(#A)) for every source A;
///   universe    = atom layer closed under connectives to depth `depth`.
///
/// Every subsentence of a member is a member, and every member below the top
/// layer has its negation in the universe. Sentence ids follow code order.
class Universe {
 public:
  static constexpr SentenceId npos = static_cast<SentenceId>(-1);

  static Universe build(const UniverseParams& params, const BaseLanguage& lang = bounded_arithmetic());

  /// Reassembles a universe from its sentences (e.g. read back from a file).
  /// Throws MalformedUniverse unless the set is subsentence-closed, names only
  /// member codes inside T-atoms and contains the negation of every T-atom.
  static Universe from_sentences(std::vector<Sentence> sentences, const BaseLanguage& lang = bounded_arithmetic());

  std::size_t size() const { return sentences_.size(); }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  const Sentence& sentence(SentenceId id) const { return sentences_[id]; }
  const GodelNumber& code(SentenceId id) const { return sentences_[id].code(); }

  std::optional<SentenceId> find(const GodelNumber& code) const;
  std::optional<SentenceId> find(const Sentence& s) const { return find(s.code()); }
  /// Throws UnknownCode.
  SentenceId id_of(const GodelNumber& code) const;
  /// The member with this code, if any.
  std::optional<Sentence> decode(const GodelNumber& code) const;

  SentenceKind kind(SentenceId id) const { return links_[id].kind; }
  SentenceId child(SentenceId id) const { return links_[id].left; }  // Not
  SentenceId left(SentenceId id) const { return links_[id].left; }
  SentenceId right(SentenceId id) const { return links_[id].right; }
  /// Id of !(s), or npos.
  SentenceId negation(SentenceId id) const { return links_[id].negation; }
  /// Id of T(#s), or npos.
  SentenceId t_atom_of(SentenceId id) const { return links_[id].t_atom; }
  /// For a T-atom T(n): the id of the member coded by n.
  SentenceId named(SentenceId id) const { return links_[id].named; }
  SentenceId quantified(SentenceKind kind) const;

  /// Codes of the T-free members that are true in the base language.
  const CodeSet& true_base() const { return true_base_; }
  /// The numeral domain of T: every member contributes its code.
  CodeSet numeral_domain() const { return CodeSet::full(size()); }
  CodeSet empty_set() const { return CodeSet(size()); }
  CodeSet full_set() const { return CodeSet::full(size()); }

  /// Throws UnknownCode for codes outside the universe.
  CodeSet make_set(std::span<const GodelNumber> codes) const;
  std::vector<GodelNumber> codes_of(const CodeSet& set) const;

  const std::optional<UniverseParams>& params() const { return params_; }

 private:
  struct Links {
    SentenceKind kind;
    SentenceId left = npos, right = npos, negation = npos, t_atom = npos, named = npos;
  };

  Universe(std::vector<Sentence> sentences, const BaseLanguage& lang);

  std::vector<Sentence> sentences_;
  std::vector<Links> links_;
  std::unordered_map<GodelNumber, SentenceId> index_;
  CodeSet true_base_;
  SentenceId quantified_[4] = {npos, npos, npos, npos};
  std::optional<UniverseParams> params_;
};

/// Codes of T-free members whose base-language truth value is true.
CodeSet compute_w(const Universe& u, const BaseLanguage& lang = bounded_arithmetic());

}  // namespace truthpred
