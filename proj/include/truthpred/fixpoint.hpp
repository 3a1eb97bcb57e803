#pragma once

#include "truthpred/code_set.hpp"
#include "truthpred/universe.hpp"

#include <span>
#include <string>
#include <vector>

namespace truthpred {

enum class StageOrigin { Seed, OperatorStep, LimitUnion };

std::string to_string(StageOrigin origin);
/// Inverse of to_string; throws std::invalid_argument.
StageOrigin parse_stage_origin(const std::string& text);

struct Stage {
  std::size_t index;
  CodeSet set;
  StageOrigin origin;
};

/// Stages strictly increase; the last stage is the fixed point when
/// reached_fixed_point holds.
struct FixpointTrace {
  std::vector<Stage> stages;
  CodeSet final;
  bool reached_fixed_point = false;
};

/// No member A with both #A and #!A in the set.
bool is_consistent(const CodeSet& set, const Universe& u);

/// The set is contained in its own truth closure.
bool is_sound(const CodeSet& set, const Universe& u);

/// Iterates the truth operator from `seed` until it stops growing. The seed
/// must be consistent (else InconsistentSeed) and sound (else UnsoundSeed).
/// The result is the smallest fixed point containing the seed; from a seed
/// made of true base sentences it is the least fixed point overall.
FixpointTrace least_fixed_point(const CodeSet& seed, const Universe& u);

/// Union of the truth closures of a chain of consistent sets, i.e. the stage
/// that follows the chain. Throws NotAChain if two members are incomparable
/// and PreconditionViolation if a member is inconsistent.
CodeSet union_stage(std::span<const CodeSet> chain, const Universe& u);

}  // namespace truthpred
