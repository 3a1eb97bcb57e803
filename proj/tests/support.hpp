#pragma once

#include "truthpred/errors.hpp"
#include "truthpred/universe.hpp"

#include <random>
#include <string>
#include <vector>

namespace truthpred::test_support {

inline UniverseParams f1_params() {
  UniverseParams p;
  p.base.seed_sentences = {"0=0", "0<0"};
  p.depth = 1;
  p.t_depth = 0;
  return p;
}

inline const Universe& f1() {
  static const Universe u = Universe::build(f1_params());
  return u;
}

// Second shipped fixture: a quantified seed, T-atoms for compounds, implication.
inline UniverseParams f2_params() {
  UniverseParams p;
  p.base.seed_sentences = {"(Ex<3)(x+x=2)"};
  p.depth = 1;
  p.t_depth = 1;
  p.connectives = ConnectiveSet::parse("not,implies");
  return p;
}

inline const Universe& f2() {
  static const Universe u = Universe::build(f2_params());
  return u;
}

// 25 sentences: one true base atom, negation only.
inline UniverseParams micro_params() {
  UniverseParams p;
  p.base.seed_sentences = {"0=0"};
  p.depth = 1;
  p.t_depth = 0;
  p.connectives = ConnectiveSet::negation_only();
  return p;
}

struct RandomUniverse {
  UniverseParams params;
  Universe universe;
};

// Random seeds, depth, T-depth and connectives, capped at `budget` sentences.
// Configurations that overflow the budget are redrawn.
inline RandomUniverse random_universe(std::mt19937_64& rng, std::size_t budget = 2000) {
  static const std::vector<std::string> pool = {
      "0=0",        "0<0",          "1+1=2",          "2*2=5",          "S(0)<1",
      "3<2+2",      "(Ax<3)(x<3)",  "(Ex<4)(x*x=4)",  "(Ax<2)(x=0)",    "S(S(0))=2*1"};
  static const SentenceKind binaries[] = {SentenceKind::Or, SentenceKind::And, SentenceKind::Implies,
                                          SentenceKind::Iff};
  for (;;) {
    UniverseParams p;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t seeds = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    for (std::size_t i = 0; i < seeds; ++i) p.base.seed_sentences.push_back(pool[pick(rng)]);
    p.base.generate_depth = std::bernoulli_distribution(0.2)(rng) ? 1 : 0;
    p.depth = std::uniform_int_distribution<unsigned>(1, 2)(rng);
    p.t_depth = std::uniform_int_distribution<unsigned>(0, p.depth)(rng);
    p.connectives = ConnectiveSet::negation_only();
    for (auto k : binaries)
      if (std::bernoulli_distribution(0.4)(rng)) p.connectives = p.connectives.with(k);
    p.budget = budget;
    try {
      Universe u = Universe::build(p);
      return {p, std::move(u)};
    } catch (const BudgetExceeded&) {
    }
  }
}

}  // namespace truthpred::test_support
