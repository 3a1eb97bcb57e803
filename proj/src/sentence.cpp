#include "truthpred/sentence.hpp"

#include "truthpred/errors.hpp"

#include <algorithm>
#include <optional>

namespace truthpred {

namespace {

enum SentenceTag : unsigned {
  kBaseTag = 1,
  kTAtomTag,
  kExistsTTag,
  kForallTTag,
  kExistsNotTTag,
  kForallNotTTag,
  kNotTag,
  kOrTag,
  kAndTag,
  kImpliesTag,
  kIffTag,
};

unsigned tag_of(SentenceKind kind) {
  return static_cast<unsigned>(kind) + 1;  // SentenceKind is declared in tag order
}

static_assert(static_cast<unsigned>(SentenceKind::Iff) + 1 == kIffTag);

}  // namespace

bool is_binary(SentenceKind kind) {
  return kind == SentenceKind::Or || kind == SentenceKind::And || kind == SentenceKind::Implies ||
         kind == SentenceKind::Iff;
}

bool is_quantified_t(SentenceKind kind) {
  return kind == SentenceKind::ExistsT || kind == SentenceKind::ForallT || kind == SentenceKind::ExistsNotT ||
         kind == SentenceKind::ForallNotT;
}

struct Sentence::Node {
  SentenceKind kind;
  std::optional<BaseFormula> formula;
  GodelNumber t_code;
  std::optional<Sentence> a, b;
  GodelNumber code;
  bool t_free = true;
  unsigned depth = 0;
};

Sentence Sentence::base_atom(BaseFormula formula) {
  if (formula.is_connective()) throw std::invalid_argument("base atom with top-level connective; use lift_base");
  if (!formula.is_closed()) throw OpenFormulaError("base sentence has free variables: " + render(formula));
  auto n = std::make_shared<Node>();
  n->kind = SentenceKind::BaseAtom;
  n->code = GodelNumber(tagged(kBaseTag, formula.code()));
  n->formula = std::move(formula);
  return Sentence(std::move(n));
}

Sentence Sentence::t_atom(GodelNumber code) {
  auto n = std::make_shared<Node>();
  n->kind = SentenceKind::TAtom;
  n->code = t_atom_code(code);
  n->t_code = std::move(code);
  n->t_free = false;
  return Sentence(std::move(n));
}

Sentence Sentence::quantified(SentenceKind kind) {
  if (!is_quantified_t(kind)) throw std::invalid_argument("not a quantified T-sentence kind");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->code = GodelNumber(tagged(tag_of(kind), 0));
  n->t_free = false;
  return Sentence(std::move(n));
}

Sentence Sentence::exists_t() { return quantified(SentenceKind::ExistsT); }
Sentence Sentence::forall_t() { return quantified(SentenceKind::ForallT); }
Sentence Sentence::exists_not_t() { return quantified(SentenceKind::ExistsNotT); }
Sentence Sentence::forall_not_t() { return quantified(SentenceKind::ForallNotT); }

Sentence Sentence::negation(Sentence inner) {
  auto n = std::make_shared<Node>();
  n->kind = SentenceKind::Not;
  n->code = negation_code(inner.code());
  n->t_free = inner.is_t_free();
  n->depth = inner.depth() + 1;
  n->a = std::move(inner);
  return Sentence(std::move(n));
}

Sentence Sentence::binary(SentenceKind kind, Sentence lhs, Sentence rhs) {
  if (!is_binary(kind)) throw std::invalid_argument("not a binary connective");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->code = GodelNumber(tagged(tag_of(kind), pair(lhs.code().value(), rhs.code().value())));
  n->t_free = lhs.is_t_free() && rhs.is_t_free();
  n->depth = std::max(lhs.depth(), rhs.depth()) + 1;
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Sentence(std::move(n));
}

SentenceKind Sentence::kind() const { return node_->kind; }
const BaseFormula& Sentence::base_formula() const { return *node_->formula; }
const GodelNumber& Sentence::t_code() const { return node_->t_code; }
const Sentence& Sentence::child() const { return *node_->a; }
const Sentence& Sentence::left() const { return *node_->a; }
const Sentence& Sentence::right() const { return *node_->b; }
const GodelNumber& Sentence::code() const { return node_->code; }
bool Sentence::is_t_free() const { return node_->t_free; }
unsigned Sentence::depth() const { return node_->depth; }

GodelNumber negation_code(const GodelNumber& inner) { return GodelNumber(tagged(kNotTag, inner.value())); }
GodelNumber t_atom_code(const GodelNumber& named) { return GodelNumber(tagged(kTAtomTag, named.value())); }

namespace {

SentenceKind lifted_kind(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Or: return SentenceKind::Or;
    case FormulaKind::And: return SentenceKind::And;
    case FormulaKind::Implies: return SentenceKind::Implies;
    case FormulaKind::Iff: return SentenceKind::Iff;
    default: throw std::logic_error("not a binary connective");
  }
}

FormulaKind lowered_kind(SentenceKind kind) {
  switch (kind) {
    case SentenceKind::Or: return FormulaKind::Or;
    case SentenceKind::And: return FormulaKind::And;
    case SentenceKind::Implies: return FormulaKind::Implies;
    case SentenceKind::Iff: return FormulaKind::Iff;
    default: throw std::logic_error("not a binary connective");
  }
}

const char* binary_symbol(SentenceKind kind) {
  switch (kind) {
    case SentenceKind::Or: return " | ";
    case SentenceKind::And: return " & ";
    case SentenceKind::Implies: return " -> ";
    case SentenceKind::Iff: return " <-> ";
    default: return "?";
  }
}

}  // namespace

Sentence lift_base(const BaseFormula& f) {
  if (f.kind() == FormulaKind::Not) return Sentence::negation(lift_base(f.child()));
  if (f.is_connective()) return Sentence::binary(lifted_kind(f.kind()), lift_base(f.left()), lift_base(f.right()));
  return Sentence::base_atom(f);
}

BaseFormula lower_to_base(const Sentence& s) {
  switch (s.kind()) {
    case SentenceKind::BaseAtom: return s.base_formula();
    case SentenceKind::Not: return BaseFormula::negation(lower_to_base(s.child()));
    case SentenceKind::Or:
    case SentenceKind::And:
    case SentenceKind::Implies:
    case SentenceKind::Iff:
      return BaseFormula::binary(lowered_kind(s.kind()), lower_to_base(s.left()), lower_to_base(s.right()));
    default: throw std::invalid_argument("sentence mentions T: " + render(s));
  }
}

std::string render(const Sentence& s) {
  switch (s.kind()) {
    case SentenceKind::BaseAtom: return render(s.base_formula());
    case SentenceKind::TAtom: return "T(" + s.t_code().to_string() + ")";
    case SentenceKind::ExistsT: return "Ex T(x)";
    case SentenceKind::ForallT: return "Ax T(x)";
    case SentenceKind::ExistsNotT: return "Ex !T(x)";
    case SentenceKind::ForallNotT: return "Ax !T(x)";
    case SentenceKind::Not: return "!(" + render(s.child()) + ")";
    case SentenceKind::Or:
    case SentenceKind::And:
    case SentenceKind::Implies:
    case SentenceKind::Iff:
      return "(" + render(s.left()) + ")" + binary_symbol(s.kind()) + "(" + render(s.right()) + ")";
  }
  return {};
}

}  // namespace truthpred
