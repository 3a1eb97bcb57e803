#pragma once

#include "truthpred/base_formula.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace truthpred {

struct BaseConfig {
  std::vector<std::string> seed_sentences;
  unsigned generate_depth = 0;
  /// Largest value a quantifier bound may take while evaluating a seed.
  unsigned numeric_bound = 16;
};

/// Classical truth of a closed base formula over the naturals. Bounded
/// quantifiers are decided by search below the bound.
/// Throws OpenFormulaError if `f` has free variables.
bool eval_base(const BaseFormula& f);

/// As eval_base, but throws NumericBoundError as soon as a quantifier bound
/// evaluates above `numeric_bound`.
bool eval_base(const BaseFormula& f, const BigNat& numeric_bound);

BigNat eval_term(const BaseTerm& t);  // closed terms only

/// Seeds first (deduplicated, in input order), then the connective compounds
/// generated up to `generate_depth`, in code order.
std::vector<BaseFormula> enumerate_base(const BaseConfig& cfg);

struct MaReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the classical truth tables on every pair and the classical
/// quantifier clauses on every bounded-quantified member, the latter against a
/// witness search over numeral instances.
MaReport check_ma_properties(const std::vector<std::pair<BaseFormula, BaseFormula>>& sample);

/// A fully interpreted base language. Implementations must be bivalent and
/// deterministic.
class BaseLanguage {
 public:
  virtual ~BaseLanguage() = default;
  virtual bool evaluate(const BaseFormula& sentence) const = 0;
  virtual std::vector<BaseFormula> enumerate(const BaseConfig& cfg) const = 0;
};

class BoundedArithmetic final : public BaseLanguage {
 public:
  bool evaluate(const BaseFormula& sentence) const override { return eval_base(sentence); }
  std::vector<BaseFormula> enumerate(const BaseConfig& cfg) const override { return enumerate_base(cfg); }
};

const BaseLanguage& bounded_arithmetic();

}  // namespace truthpred
