#include "truthpred/verifier.hpp"

#include "truthpred/base_lang.hpp"
#include "truthpred/errors.hpp"
#include "truthpred/truth_operator.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

namespace truthpred {

namespace {

constexpr SentenceKind kQuantifiedKinds[] = {SentenceKind::ExistsT, SentenceKind::ForallT,
                                             SentenceKind::ExistsNotT, SentenceKind::ForallNotT};

std::string fnv1a(const std::vector<std::string>& parts) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& p : parts) {
    for (unsigned char c : p) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= '\n';
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Accumulates one rule's outcome; keeps the first counterexample.
class RuleCheck {
 public:
  RuleCheck(std::string name, const Universe& u) : u_(u) { outcome_.rule = std::move(name); }

  void expect(SentenceId id, const char* half, bool actual, bool required) {
    ++outcome_.checked;
    if (actual == required || outcome_.counterexample) return;
    outcome_.counterexample = u_.code(id);
    outcome_.detail = std::string(half) + (actual ? " holds without its condition: " : " condition holds but membership fails: ") +
                      render(u_.sentence(id));
  }

  RuleOutcome take() { return std::move(outcome_); }

 private:
  const Universe& u_;
  RuleOutcome outcome_;
};

}  // namespace

bool RuleReport::all_passed() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleOutcome& r) { return r.passed(); });
}

const RuleOutcome& RuleReport::rule(const std::string& name) const {
  for (const auto& r : rules)
    if (r.rule == name) return r;
  throw std::out_of_range("no rule " + name);
}

Verifier::Verifier(const Universe& u) : u_(u), entries_(u.size()) {
  std::fill(std::begin(quantified_), std::end(quantified_), Universe::npos);
  auto lookup = [&](const Sentence& s) { return u.find(s).value_or(Universe::npos); };
  for (SentenceId id = 0; id < u.size(); ++id) {
    const Sentence& s = u.sentence(id);
    Entry& e = entries_[id];
    e.kind = s.kind();
    e.t_free = s.is_t_free();
    if (e.t_free) e.base_true = eval_base(lower_to_base(s));
    if (s.kind() == SentenceKind::Not) e.a = lookup(s.child());
    if (is_binary(s.kind())) {
      e.a = lookup(s.left());
      e.b = lookup(s.right());
    }
    if (s.kind() == SentenceKind::TAtom) {
      auto named = u.decode(s.t_code());
      e.named = named ? lookup(*named) : Universe::npos;
    }
    e.negation = lookup(Sentence::negation(s));
    e.t_atom = lookup(Sentence::t_atom(s.code()));
    for (int q = 0; q < 4; ++q)
      if (s.kind() == kQuantifiedKinds[q]) quantified_[q] = id;
  }
}

RuleReport Verifier::verify_rules(const CodeSet& u_set) const {
  OperatorResult r = apply_truth_operator(u_set, u_);
  return verify_rules_on(r.truths, r.falsities, u_set);
}

RuleReport Verifier::verify_rules_on(const CodeSet& g, const CodeSet& f, const CodeSet& u_set) const {
  const std::size_t n = entries_.size();

  // Membership of T(m) for every member code m.
  auto t_true = [&](SentenceId m) {
    SentenceId atom = entries_[m].t_atom;
    return atom != Universe::npos ? g.contains(atom) : u_set.contains(m);
  };
  auto t_false = [&](SentenceId m) {
    SentenceId atom = entries_[m].t_atom;
    if (atom != Universe::npos) return f.contains(atom);
    SentenceId neg = entries_[m].negation;
    return neg != Universe::npos && u_set.contains(neg);
  };
  bool some_true = false, all_true = n > 0, some_false = false, all_false = n > 0;
  for (SentenceId m = 0; m < n; ++m) {
    bool t = t_true(m), fl = t_false(m);
    some_true = some_true || t;
    all_true = all_true && t;
    some_false = some_false || fl;
    all_false = all_false && fl;
  }

  std::vector<RuleCheck> checks;
  for (int i = 0; i <= 11; ++i) checks.emplace_back("r" + std::to_string(i), u_);

  for (SentenceId id = 0; id < n; ++id) {
    const Entry& e = entries_[id];
    const bool in_g = g.contains(id), in_f = f.contains(id);
    auto G = [&](SentenceId x) { return g.contains(x); };
    auto F = [&](SentenceId x) { return f.contains(x); };

    if (e.t_free) {
      checks[1].expect(id, "truth", in_g, e.base_true);
      checks[1].expect(id, "falsity", in_f, !e.base_true);
    }
    switch (e.kind) {
      case SentenceKind::TAtom: {
        checks[2].expect(id, "truth", in_g, u_set.contains(e.named));
        SentenceId neg = entries_[e.named].negation;
        checks[2].expect(id, "falsity", in_f, neg != Universe::npos && u_set.contains(neg));
        break;
      }
      case SentenceKind::Not:
        checks[3].expect(id, "truth", in_g, F(e.a));
        checks[3].expect(id, "falsity", in_f, G(e.a));
        if (entries_[e.a].kind == SentenceKind::Not) checks[0].expect(id, "truth", in_g, G(entries_[e.a].a));
        break;
      case SentenceKind::Or:
        checks[4].expect(id, "truth", in_g, G(e.a) || G(e.b));
        checks[4].expect(id, "falsity", in_f, F(e.a) && F(e.b));
        break;
      case SentenceKind::And:
        checks[5].expect(id, "truth", in_g, G(e.a) && G(e.b));
        checks[5].expect(id, "falsity", in_f, F(e.a) || F(e.b));
        break;
      case SentenceKind::Implies:
        checks[6].expect(id, "truth", in_g, F(e.a) || G(e.b));
        checks[6].expect(id, "falsity", in_f, G(e.a) && F(e.b));
        break;
      case SentenceKind::Iff:
        checks[7].expect(id, "truth", in_g, (G(e.a) && G(e.b)) || (F(e.a) && F(e.b)));
        checks[7].expect(id, "falsity", in_f, (G(e.a) && F(e.b)) || (F(e.a) && G(e.b)));
        break;
      case SentenceKind::ExistsT:
        checks[8].expect(id, "truth", in_g, some_true);
        checks[8].expect(id, "falsity", in_f, all_false);
        break;
      case SentenceKind::ForallT:
        checks[9].expect(id, "truth", in_g, all_true);
        checks[9].expect(id, "falsity", in_f, some_false);
        break;
      case SentenceKind::ExistsNotT:
        checks[10].expect(id, "truth", in_g, some_false);
        checks[10].expect(id, "falsity", in_f, all_true);
        break;
      case SentenceKind::ForallNotT:
        checks[11].expect(id, "truth", in_g, all_false);
        checks[11].expect(id, "falsity", in_f, some_true);
        break;
      case SentenceKind::BaseAtom: break;
    }
  }

  RuleReport report;
  for (auto& c : checks) report.rules.push_back(c.take());
  report.universe_fingerprint = fingerprint();
  report.set_fingerprint = fingerprint(u_set);
  return report;
}

TruthPair Verifier::oracle(const CodeSet& u_set) const {
  const std::size_t n = entries_.size();
  std::vector<char> g(n, 0), f(n, 0);

  auto t_true = [&](SentenceId m) {
    SentenceId atom = entries_[m].t_atom;
    return atom != Universe::npos ? g[atom] != 0 : u_set.contains(m);
  };
  auto t_false = [&](SentenceId m) {
    SentenceId atom = entries_[m].t_atom;
    if (atom != Universe::npos) return f[atom] != 0;
    SentenceId neg = entries_[m].negation;
    return neg != Universe::npos && u_set.contains(neg);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    bool some_true = false, all_true = n > 0, some_false = false, all_false = n > 0;
    for (SentenceId m = 0; m < n; ++m) {
      some_true = some_true || t_true(m);
      all_true = all_true && t_true(m);
      some_false = some_false || t_false(m);
      all_false = all_false && t_false(m);
    }
    for (SentenceId id = 0; id < n; ++id) {
      const Entry& e = entries_[id];
      bool derive_g = false, derive_f = false;
      if (e.t_free) {
        derive_g = e.base_true;
        derive_f = !e.base_true;
      }
      switch (e.kind) {
        case SentenceKind::BaseAtom: break;
        case SentenceKind::TAtom: {
          derive_g = u_set.contains(e.named);
          SentenceId neg = entries_[e.named].negation;
          derive_f = neg != Universe::npos && u_set.contains(neg);
          break;
        }
        case SentenceKind::Not:
          derive_g = derive_g || f[e.a];
          derive_f = derive_f || g[e.a];
          break;
        case SentenceKind::Or:
          derive_g = derive_g || g[e.a] || g[e.b];
          derive_f = derive_f || (f[e.a] && f[e.b]);
          break;
        case SentenceKind::And:
          derive_g = derive_g || (g[e.a] && g[e.b]);
          derive_f = derive_f || f[e.a] || f[e.b];
          break;
        case SentenceKind::Implies:
          derive_g = derive_g || f[e.a] || g[e.b];
          derive_f = derive_f || (g[e.a] && f[e.b]);
          break;
        case SentenceKind::Iff:
          derive_g = derive_g || (g[e.a] && g[e.b]) || (f[e.a] && f[e.b]);
          derive_f = derive_f || (g[e.a] && f[e.b]) || (f[e.a] && g[e.b]);
          break;
        case SentenceKind::ExistsT:
          derive_g = some_true;
          derive_f = all_false;
          break;
        case SentenceKind::ForallT:
          derive_g = all_true;
          derive_f = some_false;
          break;
        case SentenceKind::ExistsNotT:
          derive_g = some_false;
          derive_f = all_true;
          break;
        case SentenceKind::ForallNotT:
          derive_g = all_false;
          derive_f = some_true;
          break;
      }
      if (derive_g && !g[id]) g[id] = 1, changed = true;
      if (derive_f && !f[id]) f[id] = 1, changed = true;
    }
  }

  TruthPair out{CodeSet(n), CodeSet(n)};
  for (SentenceId id = 0; id < n; ++id) {
    if (g[id]) out.truths.insert(id);
    if (f[id]) out.falsities.insert(id);
  }
  return out;
}

bool Verifier::consistent(const CodeSet& set) const {
  bool ok = true;
  set.for_each([&](SentenceId id) {
    SentenceId neg = entries_[id].negation;
    if (neg != Universe::npos && set.contains(neg)) ok = false;
  });
  return ok;
}

bool Verifier::disjointness(const CodeSet& u_set) const {
  if (!consistent(u_set)) throw PreconditionViolation("disjointness requires a consistent set");
  OperatorResult r = apply_truth_operator(u_set, u_);
  return !r.truths.intersects(r.falsities);
}

bool Verifier::consistency_preservation(const CodeSet& u_set) const {
  if (!consistent(u_set)) throw PreconditionViolation("consistency preservation requires a consistent set");
  OperatorResult r = apply_truth_operator(u_set, u_);
  return consistent(r.truths) && consistent(r.falsities);
}

bool Verifier::monotonicity(const CodeSet& smaller, const CodeSet& larger) const {
  if (!consistent(smaller) || !consistent(larger))
    throw PreconditionViolation("monotonicity requires consistent sets");
  if (!smaller.is_subset_of(larger)) throw PreconditionViolation("monotonicity requires nested sets");
  OperatorResult a = apply_truth_operator(smaller, u_), b = apply_truth_operator(larger, u_);
  return a.truths.is_subset_of(b.truths) && a.falsities.is_subset_of(b.falsities);
}

bool Verifier::chain_union(std::span<const CodeSet> chain) const {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!consistent(chain[i])) throw PreconditionViolation("chain member is inconsistent");
    if (i > 0 && (!chain[i - 1].is_subset_of(chain[i]) || chain[i - 1] == chain[i]))
      throw PreconditionViolation("chain is not strictly increasing");
  }
  CodeSet acc(u_.size());
  std::optional<CodeSet> previous;
  for (const auto& member : chain) {
    CodeSet closure = apply_truth_operator(member, u_).truths;
    if (!consistent(closure)) return false;
    if (previous && !previous->is_subset_of(closure)) return false;
    acc |= closure;
    previous = std::move(closure);
  }
  return consistent(acc);
}

CodeSet Verifier::random_consistent_subset(std::mt19937_64& rng, double density) const {
  std::vector<SentenceId> order(entries_.size());
  std::iota(order.begin(), order.end(), SentenceId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  CodeSet out(entries_.size());
  for (SentenceId id : order) {
    if (!coin(rng)) continue;
    const Entry& e = entries_[id];
    bool clash = (e.negation != Universe::npos && out.contains(e.negation)) ||
                 (e.kind == SentenceKind::Not && out.contains(e.a));
    if (!clash) out.insert(id);
  }
  return out;
}

std::string Verifier::fingerprint(const CodeSet& set) const {
  std::vector<std::string> parts;
  set.for_each([&](SentenceId id) { parts.push_back(u_.code(id).to_string()); });
  return fnv1a(parts);
}

std::string Verifier::fingerprint() const {
  std::vector<std::string> parts;
  for (const auto& s : u_.sentences()) parts.push_back(s.code().to_string());
  return fnv1a(parts);
}

RuleReport verify_rules(const CodeSet& u_set, const Universe& u) { return Verifier(u).verify_rules(u_set); }
bool verify_disjointness(const CodeSet& u_set, const Universe& u) { return Verifier(u).disjointness(u_set); }
bool verify_consistency_preservation(const CodeSet& u_set, const Universe& u) {
  return Verifier(u).consistency_preservation(u_set);
}
bool verify_monotonicity(const CodeSet& smaller, const CodeSet& larger, const Universe& u) {
  return Verifier(u).monotonicity(smaller, larger);
}
bool verify_chain_union(std::span<const CodeSet> chain, const Universe& u) { return Verifier(u).chain_union(chain); }
TruthPair oracle_classify(const Universe& u, const CodeSet& u_set) { return Verifier(u).oracle(u_set); }

std::string format_table(const RuleReport& report) {
  std::ostringstream out;
  out << "rule  result  checked  counterexample\n";
  for (const auto& r : report.rules) {
    char row[64];
    std::snprintf(row, sizeof row, "%-5s %-7s %-8zu ", r.rule.c_str(), r.passed() ? "pass" : "FAIL", r.checked);
    out << row << (r.passed() ? "-" : r.counterexample->to_string() + "  " + r.detail) << '\n';
  }
  out << "universe " << report.universe_fingerprint << "  set " << report.set_fingerprint << '\n';
  return out.str();
}

std::string format_lines(const RuleReport& report) {
  std::ostringstream out;
  for (const auto& r : report.rules)
    out << r.rule << '\t' << (r.passed() ? "pass" : "fail") << '\t'
        << (r.passed() ? std::string("-") : r.counterexample->to_string()) << '\n';
  return out.str();
}

}  // namespace truthpred
