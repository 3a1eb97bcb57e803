#pragma once

#include "truthpred/godel.hpp"

#include <memory>
#include <set>
#include <string>

namespace truthpred {

enum class TermKind { Numeral, Variable, Successor, Sum, Product };

/// Arithmetic term over 0, S, +, * and decimal numerals. Immutable, cheap to copy.
class BaseTerm {
 public:
  static BaseTerm numeral(BigNat value);
  static BaseTerm variable(std::string name);
  static BaseTerm successor(BaseTerm operand);
  static BaseTerm sum(BaseTerm lhs, BaseTerm rhs);
  static BaseTerm product(BaseTerm lhs, BaseTerm rhs);

  TermKind kind() const;
  const BigNat& value() const;      // Numeral
  const std::string& name() const;  // Variable
  const BaseTerm& operand() const;  // Successor
  const BaseTerm& lhs() const;      // Sum, Product
  const BaseTerm& rhs() const;
  const BigNat& code() const;

  friend bool operator==(const BaseTerm& a, const BaseTerm& b) { return a.code() == b.code(); }

 private:
  struct Node;
  explicit BaseTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind { Equal, Less, Not, Or, And, Implies, Iff, ForallBelow, ExistsBelow };

/// Formula of the bounded arithmetic base language. Quantifiers are always
/// bounded: (Ax<t)(phi), (Ex<t)(phi).
class BaseFormula {
 public:
  static BaseFormula equal(BaseTerm lhs, BaseTerm rhs);
  static BaseFormula less(BaseTerm lhs, BaseTerm rhs);
  static BaseFormula negation(BaseFormula inner);
  /// kind must be one of Or, And, Implies, Iff.
  static BaseFormula binary(FormulaKind kind, BaseFormula lhs, BaseFormula rhs);
  /// kind must be ForallBelow or ExistsBelow.
  static BaseFormula bounded(FormulaKind kind, std::string variable, BaseTerm bound, BaseFormula body);

  FormulaKind kind() const;
  bool is_connective() const;
  bool is_quantifier() const;

  const BaseTerm& lhs_term() const;  // Equal, Less
  const BaseTerm& rhs_term() const;
  const BaseFormula& child() const;  // Not
  const BaseFormula& left() const;   // binary connectives
  const BaseFormula& right() const;
  const std::string& variable() const;  // quantifiers
  const BaseTerm& bound() const;
  const BaseFormula& body() const;

  const BigNat& code() const;
  std::set<std::string> free_variables() const;
  bool is_closed() const { return free_variables().empty(); }

  friend bool operator==(const BaseFormula& a, const BaseFormula& b) { return a.code() == b.code(); }

 private:
  struct Node;
  explicit BaseFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string render(const BaseTerm& term);
std::string render(const BaseFormula& formula);

/// Replaces the free occurrences of `variable` by the numeral `value`.
BaseFormula substitute(const BaseFormula& formula, const std::string& variable, const BigNat& value);

bool is_valid_variable_name(const std::string& name);

}  // namespace truthpred
