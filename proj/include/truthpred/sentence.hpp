#pragma once

#include "truthpred/base_formula.hpp"
#include "truthpred/godel.hpp"

#include <memory>
#include <string>

namespace truthpred {

enum class SentenceKind {
  BaseAtom,    // atomic or bounded-quantified sentence of the base language
  TAtom,       // T(n)
  ExistsT,     // Ex T(x)
  ForallT,     // Ax T(x)
  ExistsNotT,  // Ex !T(x)
  ForallNotT,  // Ax !T(x)
  Not,
  Or,
  And,
  Implies,
  Iff,
};

bool is_binary(SentenceKind kind);
bool is_quantified_t(SentenceKind kind);

/// Immutable sentence tree of the extended language. The Goedel code is
/// computed once at construction and doubles as structural identity.
///
/// Codes have the shape `tag + 16 * payload`; compounds pair their children's
/// codes with a pairing map that dominates both arguments, so a compound always
/// has a larger code than each proper subsentence and T(n) has a code above n.
class Sentence {
 public:
  /// `formula` must be closed and must not have a connective at its top;
  /// use lift_base for arbitrary closed base formulas.
  static Sentence base_atom(BaseFormula formula);
  static Sentence t_atom(GodelNumber code);
  static Sentence exists_t();
  static Sentence forall_t();
  static Sentence exists_not_t();
  static Sentence forall_not_t();
  static Sentence quantified(SentenceKind kind);
  static Sentence negation(Sentence inner);
  static Sentence binary(SentenceKind kind, Sentence lhs, Sentence rhs);

  SentenceKind kind() const;
  const BaseFormula& base_formula() const;  // BaseAtom
  const GodelNumber& t_code() const;        // TAtom
  const Sentence& child() const;            // Not
  const Sentence& left() const;             // binary
  const Sentence& right() const;

  const GodelNumber& code() const;
  /// True iff no T-atom and no quantified T-sentence occurs anywhere in the tree.
  bool is_t_free() const;
  unsigned depth() const;

  friend bool operator==(const Sentence& a, const Sentence& b) { return a.code() == b.code(); }

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Converts a closed base formula into a sentence, turning its top-level
/// connectives into sentence connectives so every base sentence has exactly
/// one representation.
Sentence lift_base(const BaseFormula& formula);

/// Inverse of lift_base; `s` must be T-free.
BaseFormula lower_to_base(const Sentence& s);

std::string render(const Sentence& s);

/// Code arithmetic without materializing the sentence.
GodelNumber negation_code(const GodelNumber& inner);
GodelNumber t_atom_code(const GodelNumber& named);

}  // namespace truthpred
