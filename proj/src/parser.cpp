#include "truthpred/parser.hpp"

#include "truthpred/errors.hpp"

#include <cctype>
#include <exception>
#include <optional>
#include <string>

namespace truthpred {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Sentence parse_all_sentence() {
    Sentence s = sentence();
    expect_end();
    return s;
  }

  BaseFormula parse_all_base() {
    BaseFormula f = base_formula();
    expect_end();
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  // -- lexical helpers -----------------------------------------------------

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool lookahead(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!lookahead(token)) return false;
    pos_ += token.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }
  [[noreturn]] void fail_base(const std::string& what) { throw BaseSyntaxError(what, pos_); }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  void expect_base(std::string_view token) {
    if (!accept(token)) fail_base("expected '" + std::string(token) + "'");
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<std::string> decimal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  // "(" [AE] var "<"
  bool at_bounded_quantifier() {
    std::size_t save = pos_;
    bool ok = accept("(") && (accept("A") || accept("E")) && !identifier().empty() && lookahead("<") &&
              !lookahead("<->");
    pos_ = save;
    return ok;
  }

  // After a parenthesized group: does the input continue as a term or relation?
  bool at_term_continuation() {
    char c = peek();
    if (c == '=' || c == '+' || c == '*') return true;
    return c == '<' && !lookahead("<->");
  }

  std::optional<SentenceKind> binop() {
    if (accept("<->")) return SentenceKind::Iff;
    if (accept("->")) return SentenceKind::Implies;
    if (accept("|")) return SentenceKind::Or;
    if (accept("&")) return SentenceKind::And;
    return std::nullopt;
  }

  // -- sentences -----------------------------------------------------------

  Sentence sentence() {
    Sentence lhs = unary();
    if (auto op = binop()) {
      Sentence rhs = unary();
      return Sentence::binary(*op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Sentence unary() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      return Sentence::negation(unary());
    }
    if (c == 'T') return t_atom();
    if (c == 'E' || c == 'A') return quantified_t();
    if (c == '(' && !at_bounded_quantifier()) {
      std::size_t save = pos_;
      std::exception_ptr group_error;
      std::size_t group_pos = 0;
      try {
        ++pos_;
        Sentence inner = sentence();
        expect(")");
        if (!at_term_continuation()) return inner;
      } catch (const ParseError& e) {
        group_error = std::current_exception();
        group_pos = e.position();
      }
      pos_ = save;
      try {
        return lift_base(base_atom());
      } catch (const ParseError& e) {
        // Report whichever reading got further into the input.
        if (group_error && group_pos > e.position()) std::rethrow_exception(group_error);
        throw;
      }
    }
    if (c == '\0') fail("unexpected end of input");
    return lift_base(base_atom());
  }

  Sentence t_atom() {
    expect("T");
    expect("(");
    auto digits = decimal();
    if (!digits) fail("expected a decimal code inside T(...)");
    expect(")");
    return Sentence::t_atom(GodelNumber::parse(*digits));
  }

  Sentence quantified_t() {
    bool exists = accept("E");
    if (!exists) expect("A");
    if (identifier() != "x") fail("expected 'x' after quantifier");
    bool negated = accept("!");
    expect("T");
    expect("(");
    if (identifier() != "x") fail("expected 'x' inside T(...)");
    expect(")");
    if (exists) return negated ? Sentence::exists_not_t() : Sentence::exists_t();
    return negated ? Sentence::forall_not_t() : Sentence::forall_t();
  }

  // -- base language -------------------------------------------------------

  BaseFormula base_formula() {
    BaseFormula lhs = base_unary();
    if (auto op = binop()) {
      BaseFormula rhs = base_unary();
      FormulaKind kind = *op == SentenceKind::Or        ? FormulaKind::Or
                         : *op == SentenceKind::And     ? FormulaKind::And
                         : *op == SentenceKind::Implies ? FormulaKind::Implies
                                                        : FormulaKind::Iff;
      return BaseFormula::binary(kind, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  BaseFormula base_unary() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      return BaseFormula::negation(base_unary());
    }
    if (c == '(' && !at_bounded_quantifier()) {
      std::size_t save = pos_;
      std::exception_ptr group_error;
      std::size_t group_pos = 0;
      try {
        ++pos_;
        BaseFormula inner = base_formula();
        expect_base(")");
        if (!at_term_continuation()) return inner;
      } catch (const ParseError& e) {
        group_error = std::current_exception();
        group_pos = e.position();
      }
      pos_ = save;
      try {
        return base_atom();
      } catch (const ParseError& e) {
        if (group_error && group_pos > e.position()) std::rethrow_exception(group_error);
        throw;
      }
    }
    return base_atom();
  }

  BaseFormula base_atom() {
    if (at_bounded_quantifier()) {
      expect_base("(");
      FormulaKind kind = accept("A") ? FormulaKind::ForallBelow : (expect_base("E"), FormulaKind::ExistsBelow);
      std::string var = identifier();
      expect_base("<");
      BaseTerm bound = term();
      expect_base(")");
      expect_base("(");
      BaseFormula body = base_formula();
      expect_base(")");
      return BaseFormula::bounded(kind, std::move(var), std::move(bound), std::move(body));
    }
    BaseTerm lhs = term();
    if (accept("=")) return BaseFormula::equal(std::move(lhs), term());
    if (!lookahead("<->") && accept("<")) return BaseFormula::less(std::move(lhs), term());
    fail_base("expected '=' or '<' after term");
  }

  BaseTerm term() {
    BaseTerm acc = product();
    while (accept("+")) acc = BaseTerm::sum(std::move(acc), product());
    return acc;
  }

  BaseTerm product() {
    BaseTerm acc = unit();
    while (accept("*")) acc = BaseTerm::product(std::move(acc), unit());
    return acc;
  }

  BaseTerm unit() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return BaseTerm::numeral(BigNat(*decimal()));
    if (c == 'S') {
      ++pos_;
      expect_base("(");
      BaseTerm inner = term();
      expect_base(")");
      return BaseTerm::successor(std::move(inner));
    }
    if (c >= 'a' && c <= 'z') return BaseTerm::variable(identifier());
    if (c == '(') {
      ++pos_;
      BaseTerm inner = term();
      expect_base(")");
      return inner;
    }
    fail_base("expected a term");
  }
};

}  // namespace

Sentence parse_sentence(std::string_view text) { return Parser(text).parse_all_sentence(); }

BaseFormula parse_base_formula(std::string_view text) { return Parser(text).parse_all_base(); }

}  // namespace truthpred
