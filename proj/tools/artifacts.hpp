#pragma once

#include "truthpred/fixpoint.hpp"
#include "truthpred/universe.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace truthpred::artifacts {

// File names inside an artifact directory.
inline constexpr const char* kUniverseFile = "universe.txt";
inline constexpr const char* kTrueBaseFile = "w.txt";
inline constexpr const char* kFixpointFile = "fixpoint.txt";
inline constexpr const char* kTraceFile = "trace.txt";

enum class Kind { Universe, CodeList, StageTrace, RoundTrace };
std::string to_string(Kind kind);

// Writers produce the canonical form; every reader rejects anything else
// with ArtifactFormatError, so reading then writing is the identity.

/// "code<TAB>text" per member, in code order.
std::string write_universe(const Universe& u);
Universe read_universe(const std::string& text);

/// One decimal code per line, ascending.
std::string write_codes(const std::vector<GodelNumber>& codes);
std::vector<GodelNumber> read_codes(const std::string& text);
CodeSet read_code_set(const std::string& text, const Universe& u);

/// "stage<TAB>origin<TAB>added codes, comma-separated" per stage.
std::string write_stage_trace(const FixpointTrace& trace, const Universe& u);

struct RoundLine {
  std::size_t round;
  int rule;
  GodelNumber code;
};
/// "round<TAB>rule<TAB>code" per addition.
std::string write_round_trace(const std::vector<RoundLine>& lines);

/// Detects the artifact kind from its content and writes it back canonically.
struct Reserialized {
  Kind kind;
  std::string text;
};
Reserialized reserialize(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace truthpred::artifacts
