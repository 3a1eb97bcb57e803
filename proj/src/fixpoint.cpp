#include "truthpred/fixpoint.hpp"

#include "truthpred/errors.hpp"
#include "truthpred/truth_operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace truthpred {

std::string to_string(StageOrigin origin) {
  switch (origin) {
    case StageOrigin::Seed: return "seed";
    case StageOrigin::OperatorStep: return "G-step";
    case StageOrigin::LimitUnion: return "limit-union";
  }
  return {};
}

StageOrigin parse_stage_origin(const std::string& text) {
  if (text == "seed") return StageOrigin::Seed;
  if (text == "G-step") return StageOrigin::OperatorStep;
  if (text == "limit-union") return StageOrigin::LimitUnion;
  throw std::invalid_argument("unknown stage origin '" + text + "'");
}

bool is_consistent(const CodeSet& set, const Universe& u) {
  bool ok = true;
  set.for_each([&](SentenceId id) {
    SentenceId n = u.negation(id);
    if (n != Universe::npos && set.contains(n)) ok = false;
  });
  return ok;
}

bool is_sound(const CodeSet& set, const Universe& u) {
  return set.is_subset_of(apply_truth_operator(set, u).truths);
}

FixpointTrace least_fixed_point(const CodeSet& seed, const Universe& u) {
  if (!is_consistent(seed, u)) throw InconsistentSeed("seed contains a sentence together with its negation");
  if (!is_sound(seed, u)) throw UnsoundSeed("seed is not contained in its truth closure");

  FixpointTrace trace;
  trace.stages.push_back({0, seed, StageOrigin::Seed});
  CodeSet current = seed;
  for (;;) {
    CodeSet next = apply_truth_operator(current, u).truths;
    if (next == current) break;
    // Monotonicity plus soundness of the seed keep the chain increasing.
    if (!current.is_subset_of(next)) throw std::logic_error("operator chain stopped increasing");
    trace.stages.push_back({trace.stages.size(), next, StageOrigin::OperatorStep});
    current = std::move(next);
  }
  trace.final = std::move(current);
  trace.reached_fixed_point = true;
  return trace;
}

CodeSet union_stage(std::span<const CodeSet> chain, const Universe& u) {
  std::vector<const CodeSet*> ordered;
  for (const auto& s : chain) {
    if (!is_consistent(s, u)) throw PreconditionViolation("chain member is inconsistent");
    ordered.push_back(&s);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const CodeSet* a, const CodeSet* b) { return a->count() < b->count(); });
  for (std::size_t i = 1; i < ordered.size(); ++i)
    if (!ordered[i - 1]->is_subset_of(*ordered[i])) throw NotAChain("stages are not ordered by inclusion");

  CodeSet out(u.size());
  for (const CodeSet* s : ordered) out |= apply_truth_operator(*s, u).truths;
  if (!is_consistent(out, u)) throw std::logic_error("union of a consistent chain's closures is inconsistent");
  return out;
}

}  // namespace truthpred
