#include "truthpred/base_formula.hpp"

#include "truthpred/errors.hpp"

#include <cassert>
#include <optional>

namespace truthpred {

namespace {

enum TermTag : unsigned { kNumeralTag = 1, kVariableTag, kSuccessorTag, kSumTag, kProductTag };
enum FormulaTag : unsigned {
  kEqualTag = 1,
  kLessTag,
  kNotTag,
  kOrTag,
  kAndTag,
  kImpliesTag,
  kIffTag,
  kForallTag,
  kExistsTag
};

// Bijective base-37 numbering of identifier strings; the empty string is 0.
BigNat name_code(const std::string& name) {
  BigNat n = 0;
  for (char c : name) {
    unsigned digit = 0;
    if (c >= 'a' && c <= 'z')
      digit = static_cast<unsigned>(c - 'a') + 1;
    else if (c >= '0' && c <= '9')
      digit = static_cast<unsigned>(c - '0') + 27;
    else
      digit = 37;  // '_'
    n = n * 37 + digit;
  }
  return n;
}

unsigned formula_tag(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Equal: return kEqualTag;
    case FormulaKind::Less: return kLessTag;
    case FormulaKind::Not: return kNotTag;
    case FormulaKind::Or: return kOrTag;
    case FormulaKind::And: return kAndTag;
    case FormulaKind::Implies: return kImpliesTag;
    case FormulaKind::Iff: return kIffTag;
    case FormulaKind::ForallBelow: return kForallTag;
    case FormulaKind::ExistsBelow: return kExistsTag;
  }
  return 0;
}

}  // namespace

bool is_valid_variable_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return true;
}

// ---------------------------------------------------------------------------
// BaseTerm

struct BaseTerm::Node {
  TermKind kind;
  BigNat value;
  std::string name;
  std::optional<BaseTerm> a, b;
  BigNat code;
};

BaseTerm BaseTerm::numeral(BigNat value) {
  if (value < 0) throw std::invalid_argument("numerals denote natural numbers");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Numeral;
  n->code = tagged(kNumeralTag, value);
  n->value = std::move(value);
  return BaseTerm(std::move(n));
}

BaseTerm BaseTerm::variable(std::string name) {
  if (!is_valid_variable_name(name)) throw std::invalid_argument("bad variable name: " + name);
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Variable;
  n->code = tagged(kVariableTag, name_code(name));
  n->name = std::move(name);
  return BaseTerm(std::move(n));
}

BaseTerm BaseTerm::successor(BaseTerm operand) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Successor;
  n->code = tagged(kSuccessorTag, operand.code());
  n->a = std::move(operand);
  return BaseTerm(std::move(n));
}

BaseTerm BaseTerm::sum(BaseTerm lhs, BaseTerm rhs) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Sum;
  n->code = tagged(kSumTag, pair(lhs.code(), rhs.code()));
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return BaseTerm(std::move(n));
}

BaseTerm BaseTerm::product(BaseTerm lhs, BaseTerm rhs) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Product;
  n->code = tagged(kProductTag, pair(lhs.code(), rhs.code()));
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return BaseTerm(std::move(n));
}

TermKind BaseTerm::kind() const { return node_->kind; }
const BigNat& BaseTerm::value() const { return node_->value; }
const std::string& BaseTerm::name() const { return node_->name; }
const BaseTerm& BaseTerm::operand() const { return *node_->a; }
const BaseTerm& BaseTerm::lhs() const { return *node_->a; }
const BaseTerm& BaseTerm::rhs() const { return *node_->b; }
const BigNat& BaseTerm::code() const { return node_->code; }

// ---------------------------------------------------------------------------
// BaseFormula

struct BaseFormula::Node {
  FormulaKind kind;
  std::optional<BaseTerm> t1, t2;
  std::optional<BaseFormula> f1, f2;
  std::string variable;
  BigNat code;
};

BaseFormula BaseFormula::equal(BaseTerm lhs, BaseTerm rhs) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Equal;
  n->code = tagged(kEqualTag, pair(lhs.code(), rhs.code()));
  n->t1 = std::move(lhs);
  n->t2 = std::move(rhs);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::less(BaseTerm lhs, BaseTerm rhs) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Less;
  n->code = tagged(kLessTag, pair(lhs.code(), rhs.code()));
  n->t1 = std::move(lhs);
  n->t2 = std::move(rhs);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::negation(BaseFormula inner) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Not;
  n->code = tagged(kNotTag, inner.code());
  n->f1 = std::move(inner);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::binary(FormulaKind kind, BaseFormula lhs, BaseFormula rhs) {
  if (kind != FormulaKind::Or && kind != FormulaKind::And && kind != FormulaKind::Implies &&
      kind != FormulaKind::Iff)
    throw std::invalid_argument("not a binary connective");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->code = tagged(formula_tag(kind), pair(lhs.code(), rhs.code()));
  n->f1 = std::move(lhs);
  n->f2 = std::move(rhs);
  return BaseFormula(std::move(n));
}

BaseFormula BaseFormula::bounded(FormulaKind kind, std::string variable, BaseTerm bound, BaseFormula body) {
  if (kind != FormulaKind::ForallBelow && kind != FormulaKind::ExistsBelow)
    throw std::invalid_argument("not a bounded quantifier");
  if (!is_valid_variable_name(variable)) throw std::invalid_argument("bad variable name: " + variable);
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->code = tagged(formula_tag(kind), pair(name_code(variable), pair(bound.code(), body.code())));
  n->variable = std::move(variable);
  n->t1 = std::move(bound);
  n->f1 = std::move(body);
  return BaseFormula(std::move(n));
}

FormulaKind BaseFormula::kind() const { return node_->kind; }

bool BaseFormula::is_connective() const {
  switch (node_->kind) {
    case FormulaKind::Not:
    case FormulaKind::Or:
    case FormulaKind::And:
    case FormulaKind::Implies:
    case FormulaKind::Iff: return true;
    default: return false;
  }
}

bool BaseFormula::is_quantifier() const {
  return node_->kind == FormulaKind::ForallBelow || node_->kind == FormulaKind::ExistsBelow;
}

const BaseTerm& BaseFormula::lhs_term() const { return *node_->t1; }
const BaseTerm& BaseFormula::rhs_term() const { return *node_->t2; }
const BaseFormula& BaseFormula::child() const { return *node_->f1; }
const BaseFormula& BaseFormula::left() const { return *node_->f1; }
const BaseFormula& BaseFormula::right() const { return *node_->f2; }
const std::string& BaseFormula::variable() const { return node_->variable; }
const BaseTerm& BaseFormula::bound() const { return *node_->t1; }
const BaseFormula& BaseFormula::body() const { return *node_->f1; }
const BigNat& BaseFormula::code() const { return node_->code; }

namespace {

void collect_free(const BaseTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Numeral: return;
    case TermKind::Variable: out.insert(t.name()); return;
    case TermKind::Successor: collect_free(t.operand(), out); return;
    case TermKind::Sum:
    case TermKind::Product:
      collect_free(t.lhs(), out);
      collect_free(t.rhs(), out);
      return;
  }
}

void collect_free(const BaseFormula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Equal:
    case FormulaKind::Less:
      collect_free(f.lhs_term(), out);
      collect_free(f.rhs_term(), out);
      return;
    case FormulaKind::Not: collect_free(f.child(), out); return;
    case FormulaKind::Or:
    case FormulaKind::And:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      collect_free(f.left(), out);
      collect_free(f.right(), out);
      return;
    case FormulaKind::ForallBelow:
    case FormulaKind::ExistsBelow: {
      // The bound is outside the scope of the quantified variable.
      collect_free(f.bound(), out);
      std::set<std::string> inner;
      collect_free(f.body(), inner);
      inner.erase(f.variable());
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

BaseTerm substitute_term(const BaseTerm& t, const std::string& var, const BigNat& value) {
  switch (t.kind()) {
    case TermKind::Numeral: return t;
    case TermKind::Variable: return t.name() == var ? BaseTerm::numeral(value) : t;
    case TermKind::Successor: return BaseTerm::successor(substitute_term(t.operand(), var, value));
    case TermKind::Sum:
      return BaseTerm::sum(substitute_term(t.lhs(), var, value), substitute_term(t.rhs(), var, value));
    case TermKind::Product:
      return BaseTerm::product(substitute_term(t.lhs(), var, value), substitute_term(t.rhs(), var, value));
  }
  return t;
}

std::string render_wrapped(const BaseTerm& t, bool wrap) {
  return wrap ? "(" + render(t) + ")" : render(t);
}

}  // namespace

std::set<std::string> BaseFormula::free_variables() const {
  std::set<std::string> out;
  collect_free(*this, out);
  return out;
}

BaseFormula substitute(const BaseFormula& f, const std::string& var, const BigNat& value) {
  switch (f.kind()) {
    case FormulaKind::Equal:
      return BaseFormula::equal(substitute_term(f.lhs_term(), var, value), substitute_term(f.rhs_term(), var, value));
    case FormulaKind::Less:
      return BaseFormula::less(substitute_term(f.lhs_term(), var, value), substitute_term(f.rhs_term(), var, value));
    case FormulaKind::Not: return BaseFormula::negation(substitute(f.child(), var, value));
    case FormulaKind::Or:
    case FormulaKind::And:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return BaseFormula::binary(f.kind(), substitute(f.left(), var, value), substitute(f.right(), var, value));
    case FormulaKind::ForallBelow:
    case FormulaKind::ExistsBelow: {
      BaseTerm bound = substitute_term(f.bound(), var, value);
      if (f.variable() == var) return BaseFormula::bounded(f.kind(), f.variable(), bound, f.body());
      return BaseFormula::bounded(f.kind(), f.variable(), bound, substitute(f.body(), var, value));
    }
  }
  return f;
}

// Sums are left-associative and products bind tighter; parentheses appear only
// where the tree shape requires them.
std::string render(const BaseTerm& t) {
  switch (t.kind()) {
    case TermKind::Numeral: return t.value().str();
    case TermKind::Variable: return t.name();
    case TermKind::Successor: return "S(" + render(t.operand()) + ")";
    case TermKind::Sum: return render(t.lhs()) + "+" + render_wrapped(t.rhs(), t.rhs().kind() == TermKind::Sum);
    case TermKind::Product:
      return render_wrapped(t.lhs(), t.lhs().kind() == TermKind::Sum) + "*" +
             render_wrapped(t.rhs(), t.rhs().kind() == TermKind::Sum || t.rhs().kind() == TermKind::Product);
  }
  return {};
}

std::string render(const BaseFormula& f) {
  switch (f.kind()) {
    case FormulaKind::Equal: return render(f.lhs_term()) + "=" + render(f.rhs_term());
    case FormulaKind::Less: return render(f.lhs_term()) + "<" + render(f.rhs_term());
    case FormulaKind::Not: return "!(" + render(f.child()) + ")";
    case FormulaKind::Or: return "(" + render(f.left()) + ") | (" + render(f.right()) + ")";
    case FormulaKind::And: return "(" + render(f.left()) + ") & (" + render(f.right()) + ")";
    case FormulaKind::Implies: return "(" + render(f.left()) + ") -> (" + render(f.right()) + ")";
    case FormulaKind::Iff: return "(" + render(f.left()) + ") <-> (" + render(f.right()) + ")";
    case FormulaKind::ForallBelow:
      return "(A" + f.variable() + "<" + render(f.bound()) + ")(" + render(f.body()) + ")";
    case FormulaKind::ExistsBelow:
      return "(E" + f.variable() + "<" + render(f.bound()) + ")(" + render(f.body()) + ")";
  }
  return {};
}

}  // namespace truthpred
