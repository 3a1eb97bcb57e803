#include "truthpred/universe.hpp"

#include "truthpred/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace truthpred {

namespace {

constexpr SentenceKind kBinaryKinds[] = {SentenceKind::Or, SentenceKind::And, SentenceKind::Implies,
                                         SentenceKind::Iff};
constexpr SentenceKind kQuantifiedKinds[] = {SentenceKind::ExistsT, SentenceKind::ForallT,
                                             SentenceKind::ExistsNotT, SentenceKind::ForallNotT};

unsigned connective_bit(SentenceKind kind) {
  switch (kind) {
    case SentenceKind::Not: return 1;
    case SentenceKind::Or: return 2;
    case SentenceKind::And: return 4;
    case SentenceKind::Implies: return 8;
    case SentenceKind::Iff: return 16;
    default: return 0;
  }
}

int quantified_slot(SentenceKind kind) {
  switch (kind) {
    case SentenceKind::ExistsT: return 0;
    case SentenceKind::ForallT: return 1;
    case SentenceKind::ExistsNotT: return 2;
    case SentenceKind::ForallNotT: return 3;
    default: return -1;
  }
}

// Insertion-ordered set of sentences keyed by code, with a size cap.
class SentencePool {
 public:
  explicit SentencePool(std::size_t budget) : budget_(budget) {}

  bool add(const Sentence& s) {
    if (!codes_.insert(s.code()).second) return false;
    if (codes_.size() > budget_)
      throw BudgetExceeded("universe exceeds the budget of " + std::to_string(budget_) + " sentences");
    members_.push_back(s);
    return true;
  }

  void add_with_subsentences(const Sentence& s) {
    switch (s.kind()) {
      case SentenceKind::Not: add_with_subsentences(s.child()); break;
      case SentenceKind::Or:
      case SentenceKind::And:
      case SentenceKind::Implies:
      case SentenceKind::Iff:
        add_with_subsentences(s.left());
        add_with_subsentences(s.right());
        break;
      default: break;
    }
    add(s);
  }

  const std::vector<Sentence>& members() const { return members_; }
  std::vector<Sentence> take() { return std::move(members_); }

 private:
  std::size_t budget_;
  std::unordered_set<GodelNumber> codes_;
  std::vector<Sentence> members_;
};

// Closes `layer` under the allowed connectives up to `depth` further levels.
std::vector<Sentence> close_under(const std::vector<Sentence>& layer, unsigned depth, ConnectiveSet connectives,
                                  std::size_t budget) {
  SentencePool pool(budget);
  for (const auto& s : layer) pool.add(s);
  std::vector<Sentence> frontier = pool.members();
  for (unsigned level = 0; level < depth; ++level) {
    const std::vector<Sentence> previous = pool.members();
    std::vector<Sentence> next;
    auto admit = [&](Sentence s) {
      if (pool.add(s)) next.push_back(std::move(s));
    };
    if (connectives.allows(SentenceKind::Not))
      for (const auto& a : frontier) admit(Sentence::negation(a));
    for (SentenceKind kind : kBinaryKinds) {
      if (!connectives.allows(kind)) continue;
      // Every new compound has at least one operand from the previous frontier.
      for (const auto& a : frontier)
        for (const auto& b : previous) {
          admit(Sentence::binary(kind, a, b));
          admit(Sentence::binary(kind, b, a));
        }
    }
    frontier = std::move(next);
  }
  return pool.take();
}

}  // namespace

// ---------------------------------------------------------------------------
// ConnectiveSet

ConnectiveSet ConnectiveSet::parse(const std::string& list) {
  unsigned mask = 0;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "not") mask |= 1;
    else if (item == "or") mask |= 2;
    else if (item == "and") mask |= 4;
    else if (item == "implies") mask |= 8;
    else if (item == "iff") mask |= 16;
    else if (item == "all") mask |= kAll;
    else throw std::invalid_argument("unknown connective '" + item + "'");
  }
  if (!(mask & kNot)) throw std::invalid_argument("negation must be among the connectives");
  return ConnectiveSet(mask);
}

bool ConnectiveSet::allows(SentenceKind kind) const { return (mask_ & connective_bit(kind)) != 0; }

ConnectiveSet ConnectiveSet::with(SentenceKind kind) const { return ConnectiveSet(mask_ | connective_bit(kind)); }

std::string ConnectiveSet::to_string() const {
  static const char* names[] = {"not", "or", "and", "implies", "iff"};
  std::string out;
  for (unsigned i = 0; i < 5; ++i)
    if (mask_ & (1u << i)) out += (out.empty() ? "" : ",") + std::string(names[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Universe

Universe Universe::build(const UniverseParams& params, const BaseLanguage& lang) {
  if (params.depth < 1) throw std::invalid_argument("connective depth must be at least 1");
  if (params.t_depth > params.depth) throw std::invalid_argument("T-atom source depth must not exceed depth");

  SentencePool s0(params.budget);
  for (const auto& f : lang.enumerate(params.base)) s0.add_with_subsentences(lift_base(f));
  for (SentenceKind kind : kQuantifiedKinds) s0.add(Sentence::quantified(kind));

  const std::vector<Sentence> sources = close_under(s0.members(), params.t_depth, params.connectives, params.budget);

  std::vector<Sentence> atoms = s0.members();
  for (const auto& a : sources) atoms.push_back(Sentence::t_atom(a.code()));
  for (const auto& a : sources) atoms.push_back(Sentence::negation(Sentence::t_atom(a.code())));

  Universe u(close_under(atoms, params.depth, params.connectives, params.budget), lang);
  u.params_ = params;
  return u;
}

Universe Universe::from_sentences(std::vector<Sentence> sentences, const BaseLanguage& lang) {
  std::unordered_set<GodelNumber> seen;
  for (const auto& s : sentences)
    if (!seen.insert(s.code()).second) throw MalformedUniverse("duplicate sentence " + render(s));
  Universe u(std::move(sentences), lang);
  for (SentenceId id = 0; id < u.size(); ++id) {
    const Sentence& s = u.sentence(id);
    switch (s.kind()) {
      case SentenceKind::Not:
        if (u.links_[id].left == npos) throw MalformedUniverse("missing subsentence of " + render(s));
        break;
      case SentenceKind::Or:
      case SentenceKind::And:
      case SentenceKind::Implies:
      case SentenceKind::Iff:
        if (u.links_[id].left == npos || u.links_[id].right == npos)
          throw MalformedUniverse("missing subsentence of " + render(s));
        break;
      case SentenceKind::TAtom:
        if (u.links_[id].named == npos) throw MalformedUniverse("T-atom names a code outside the universe: " + render(s));
        break;
      default: break;
    }
    // Falsity of a member is read off negations of its parts (or its own).
    if (s.kind() == SentenceKind::Not || is_binary(s.kind())) {
      for (SentenceId part : {u.links_[id].left, u.links_[id].right})
        if (part != npos && u.links_[part].negation == npos)
          throw MalformedUniverse("missing negation of " + render(u.sentence(part)));
    } else if (u.links_[id].negation == npos) {
      throw MalformedUniverse("missing negation of atom " + render(s));
    }
  }
  return u;
}

Universe::Universe(std::vector<Sentence> sentences, const BaseLanguage& lang) : sentences_(std::move(sentences)) {
  std::sort(sentences_.begin(), sentences_.end(),
            [](const Sentence& a, const Sentence& b) { return a.code() < b.code(); });
  index_.reserve(sentences_.size());
  for (SentenceId id = 0; id < sentences_.size(); ++id) index_.emplace(sentences_[id].code(), id);

  auto lookup = [&](const GodelNumber& c) {
    auto it = index_.find(c);
    return it == index_.end() ? npos : it->second;
  };
  links_.resize(sentences_.size());
  for (SentenceId id = 0; id < sentences_.size(); ++id) {
    const Sentence& s = sentences_[id];
    Links& l = links_[id];
    l.kind = s.kind();
    if (s.kind() == SentenceKind::Not) {
      l.left = lookup(s.child().code());
    } else if (is_binary(s.kind())) {
      l.left = lookup(s.left().code());
      l.right = lookup(s.right().code());
    } else if (s.kind() == SentenceKind::TAtom) {
      l.named = lookup(s.t_code());
    }
    l.negation = lookup(negation_code(s.code()));
    l.t_atom = lookup(t_atom_code(s.code()));
    if (int slot = quantified_slot(s.kind()); slot >= 0) quantified_[slot] = id;
  }
  true_base_ = compute_w(*this, lang);
}

std::optional<SentenceId> Universe::find(const GodelNumber& code) const {
  auto it = index_.find(code);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SentenceId Universe::id_of(const GodelNumber& code) const {
  auto id = find(code);
  if (!id) throw UnknownCode("code " + code.to_string() + " is not in the universe");
  return *id;
}

std::optional<Sentence> Universe::decode(const GodelNumber& code) const {
  auto id = find(code);
  if (!id) return std::nullopt;
  return sentences_[*id];
}

SentenceId Universe::quantified(SentenceKind kind) const {
  int slot = quantified_slot(kind);
  return slot < 0 ? npos : quantified_[slot];
}

CodeSet Universe::make_set(std::span<const GodelNumber> codes) const {
  CodeSet out(size());
  for (const auto& c : codes) out.insert(id_of(c));
  return out;
}

std::vector<GodelNumber> Universe::codes_of(const CodeSet& set) const {
  std::vector<GodelNumber> out;
  out.reserve(set.count());
  set.for_each([&](SentenceId id) { out.push_back(code(id)); });
  return out;
}

CodeSet compute_w(const Universe& u, const BaseLanguage& lang) {
  CodeSet w(u.size());
  for (SentenceId id = 0; id < u.size(); ++id) {
    const Sentence& s = u.sentence(id);
    if (s.is_t_free() && lang.evaluate(lower_to_base(s))) w.insert(id);
  }
  return w;
}

}  // namespace truthpred
