#include "truthpred/base_lang.hpp"

#include "truthpred/errors.hpp"
#include "truthpred/parser.hpp"

#include <algorithm>
#include <unordered_set>

namespace truthpred {

namespace {

using Env = std::vector<std::pair<std::string, BigNat>>;

BigNat eval_term_in(const BaseTerm& t, const Env& env) {
  switch (t.kind()) {
    case TermKind::Numeral: return t.value();
    case TermKind::Variable:
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == t.name()) return it->second;
      throw OpenFormulaError("unbound variable " + t.name());
    case TermKind::Successor: return eval_term_in(t.operand(), env) + 1;
    case TermKind::Sum: return eval_term_in(t.lhs(), env) + eval_term_in(t.rhs(), env);
    case TermKind::Product: return eval_term_in(t.lhs(), env) * eval_term_in(t.rhs(), env);
  }
  return 0;
}

class Evaluator {
 public:
  explicit Evaluator(const BigNat* limit) : limit_(limit) {}

  bool eval(const BaseFormula& f, Env& env) const {
    switch (f.kind()) {
      case FormulaKind::Equal: return eval_term_in(f.lhs_term(), env) == eval_term_in(f.rhs_term(), env);
      case FormulaKind::Less: return eval_term_in(f.lhs_term(), env) < eval_term_in(f.rhs_term(), env);
      case FormulaKind::Not: return !eval(f.child(), env);
      case FormulaKind::Or: return eval(f.left(), env) || eval(f.right(), env);
      case FormulaKind::And: return eval(f.left(), env) && eval(f.right(), env);
      case FormulaKind::Implies: return !eval(f.left(), env) || eval(f.right(), env);
      case FormulaKind::Iff: return eval(f.left(), env) == eval(f.right(), env);
      case FormulaKind::ForallBelow:
      case FormulaKind::ExistsBelow: {
        BigNat bound = eval_term_in(f.bound(), env);
        if (limit_ && bound > *limit_)
          throw NumericBoundError("quantifier bound " + bound.str() + " exceeds numeric bound " + limit_->str() +
                                  " in " + render(f));
        const bool universal = f.kind() == FormulaKind::ForallBelow;
        env.emplace_back(f.variable(), BigNat(0));
        bool result = universal;
        for (BigNat k = 0; k < bound; ++k) {
          env.back().second = k;
          if (eval(f.body(), env) != universal) {
            result = !universal;
            break;
          }
        }
        env.pop_back();
        return result;
      }
    }
    return false;
  }

 private:
  const BigNat* limit_;
};

void require_closed(const BaseFormula& f) {
  auto free = f.free_variables();
  if (!free.empty()) throw OpenFormulaError("formula has free variable " + *free.begin() + ": " + render(f));
}

}  // namespace

BigNat eval_term(const BaseTerm& t) { return eval_term_in(t, {}); }

bool eval_base(const BaseFormula& f) {
  require_closed(f);
  Env env;
  return Evaluator(nullptr).eval(f, env);
}

bool eval_base(const BaseFormula& f, const BigNat& numeric_bound) {
  require_closed(f);
  Env env;
  return Evaluator(&numeric_bound).eval(f, env);
}

std::vector<BaseFormula> enumerate_base(const BaseConfig& cfg) {
  std::vector<BaseFormula> out;
  std::unordered_set<BigNat> seen;
  const BigNat limit(cfg.numeric_bound);
  for (const auto& text : cfg.seed_sentences) {
    BaseFormula f = parse_base_formula(text);
    eval_base(f, limit);  // closedness and bound check
    if (seen.insert(f.code()).second) out.push_back(f);
  }

  std::vector<BaseFormula> level = out;
  std::vector<BaseFormula> generated;
  static constexpr FormulaKind kBinary[] = {FormulaKind::Or, FormulaKind::And, FormulaKind::Implies,
                                            FormulaKind::Iff};
  for (unsigned depth = 0; depth < cfg.generate_depth; ++depth) {
    std::vector<BaseFormula> next = level;
    auto admit = [&](BaseFormula f) {
      if (seen.insert(f.code()).second) {
        generated.push_back(f);
        next.push_back(std::move(f));
      }
    };
    for (const auto& a : level) admit(BaseFormula::negation(a));
    for (FormulaKind kind : kBinary)
      for (const auto& a : level)
        for (const auto& b : level) admit(BaseFormula::binary(kind, a, b));
    level = std::move(next);
  }
  std::sort(generated.begin(), generated.end(),
            [](const BaseFormula& a, const BaseFormula& b) { return a.code() < b.code(); });
  out.insert(out.end(), generated.begin(), generated.end());
  return out;
}

MaReport check_ma_properties(const std::vector<std::pair<BaseFormula, BaseFormula>>& sample) {
  MaReport report;
  auto check = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.violations.push_back(what);
  };
  auto check_quantifier = [&](const BaseFormula& q) {
    if (!q.is_quantifier()) return;
    // Witness search over numeral instances of the body.
    BigNat bound = eval_term(q.bound());
    bool any = false, all = true;
    for (BigNat k = 0; k < bound; ++k) {
      bool instance = eval_base(substitute(q.body(), q.variable(), k));
      any = any || instance;
      all = all && instance;
    }
    bool expected = q.kind() == FormulaKind::ExistsBelow ? any : all;
    check(eval_base(q) == expected, "quantifier rule: " + render(q));
  };

  for (const auto& [a, b] : sample) {
    const bool va = eval_base(a), vb = eval_base(b);
    const std::string pair_text = render(a) + " / " + render(b);
    check(eval_base(BaseFormula::negation(a)) == !va, "negation: " + render(a));
    check(eval_base(BaseFormula::negation(b)) == !vb, "negation: " + render(b));
    check(eval_base(BaseFormula::binary(FormulaKind::Or, a, b)) == (va || vb), "disjunction: " + pair_text);
    check(eval_base(BaseFormula::binary(FormulaKind::And, a, b)) == (va && vb), "conjunction: " + pair_text);
    check(eval_base(BaseFormula::binary(FormulaKind::Implies, a, b)) == (!va || vb), "implication: " + pair_text);
    check(eval_base(BaseFormula::binary(FormulaKind::Iff, a, b)) == (va == vb), "biconditional: " + pair_text);
    check_quantifier(a);
    check_quantifier(b);
  }
  return report;
}

const BaseLanguage& bounded_arithmetic() {
  static const BoundedArithmetic instance;
  return instance;
}

}  // namespace truthpred
