#include "artifacts.hpp"

#include "truthpred/errors.hpp"
#include "truthpred/parser.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace truthpred::artifacts {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(sep, start);
    if (end == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

// Lines of a newline-terminated file; an empty file has no lines.
std::vector<std::string> lines_of(const std::string& text) {
  if (text.empty()) return {};
  if (text.back() != '\n') throw ArtifactFormatError("artifact does not end with a newline");
  std::vector<std::string> lines = split(text.substr(0, text.size() - 1), '\n');
  return lines;
}

GodelNumber parse_code(const std::string& field, std::size_t line) {
  try {
    GodelNumber n = GodelNumber::parse(field);
    if (n.to_string() != field) throw std::invalid_argument("non-canonical");
    return n;
  } catch (const std::invalid_argument&) {
    throw ArtifactFormatError("line " + std::to_string(line) + ": bad code '" + field + "'");
  }
}

std::size_t parse_index(const std::string& field, std::size_t line) {
  if (field.empty() || field.size() > 18 || !std::all_of(field.begin(), field.end(), ::isdigit) ||
      (field.size() > 1 && field[0] == '0'))
    throw ArtifactFormatError("line " + std::to_string(line) + ": bad number '" + field + "'");
  return std::stoull(field);
}

std::vector<GodelNumber> parse_code_list(const std::string& field, std::size_t line) {
  std::vector<GodelNumber> codes;
  if (field.empty()) return codes;
  for (const auto& part : split(field, ',')) codes.push_back(parse_code(part, line));
  return codes;
}

void require_ascending(const std::vector<GodelNumber>& codes, const char* what) {
  for (std::size_t i = 1; i < codes.size(); ++i)
    if (!(codes[i - 1] < codes[i])) throw ArtifactFormatError(std::string(what) + " codes are not strictly ascending");
}

std::string join_codes(const std::vector<GodelNumber>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += ',';
    out += codes[i].to_string();
  }
  return out;
}

// Re-checks a stage trace: indices count from 0, origins parse, codes ascend.
std::string reserialize_stage_trace(const std::vector<std::string>& lines) {
  std::ostringstream out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto fields = split(lines[i], '\t');
    if (fields.size() != 3) throw ArtifactFormatError("line " + std::to_string(i + 1) + ": expected 3 fields");
    if (parse_index(fields[0], i + 1) != i) throw ArtifactFormatError("stage indices must count up from 0");
    StageOrigin origin;
    try {
      origin = parse_stage_origin(fields[1]);
    } catch (const std::invalid_argument&) {
      throw ArtifactFormatError("line " + std::to_string(i + 1) + ": unknown origin '" + fields[1] + "'");
    }
    auto codes = parse_code_list(fields[2], i + 1);
    require_ascending(codes, "stage");
    out << i << '\t' << to_string(origin) << '\t' << join_codes(codes) << '\n';
  }
  return out.str();
}

std::string reserialize_round_trace(const std::vector<std::string>& lines) {
  std::vector<RoundLine> parsed;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto fields = split(lines[i], '\t');
    if (fields.size() != 3) throw ArtifactFormatError("line " + std::to_string(i + 1) + ": expected 3 fields");
    std::size_t rule = parse_index(fields[1], i + 1);
    if (rule > 9) throw ArtifactFormatError("line " + std::to_string(i + 1) + ": rule out of range");
    parsed.push_back({parse_index(fields[0], i + 1), static_cast<int>(rule), parse_code(fields[2], i + 1)});
  }
  return write_round_trace(parsed);
}

bool looks_like_origin(const std::string& field) {
  try {
    parse_stage_origin(field);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::Universe: return "universe";
    case Kind::CodeList: return "codes";
    case Kind::StageTrace: return "stage-trace";
    case Kind::RoundTrace: return "round-trace";
  }
  return "?";
}

std::string write_universe(const Universe& u) {
  std::ostringstream out;
  for (const auto& s : u.sentences()) out << s.code().to_string() << '\t' << render(s) << '\n';
  return out.str();
}

Universe read_universe(const std::string& text) {
  std::vector<Sentence> sentences;
  auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto tab = lines[i].find('\t');
    if (tab == std::string::npos) throw ArtifactFormatError("line " + std::to_string(i + 1) + ": missing tab");
    GodelNumber code = parse_code(lines[i].substr(0, tab), i + 1);
    Sentence s = parse_sentence(lines[i].substr(tab + 1));
    if (s.code() != code)
      throw ArtifactFormatError("line " + std::to_string(i + 1) + ": code does not match the sentence");
    if (render(s) != lines[i].substr(tab + 1))
      throw ArtifactFormatError("line " + std::to_string(i + 1) + ": sentence is not in canonical form");
    if (!sentences.empty() && !(sentences.back().code() < code))
      throw ArtifactFormatError("universe codes are not strictly ascending");
    sentences.push_back(std::move(s));
  }
  return Universe::from_sentences(std::move(sentences));
}

std::string write_codes(const std::vector<GodelNumber>& codes) {
  std::string out;
  for (const auto& c : codes) out += c.to_string() + '\n';
  return out;
}

std::vector<GodelNumber> read_codes(const std::string& text) {
  std::vector<GodelNumber> codes;
  auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) codes.push_back(parse_code(lines[i], i + 1));
  require_ascending(codes, "listed");
  return codes;
}

CodeSet read_code_set(const std::string& text, const Universe& u) {
  auto codes = read_codes(text);
  return u.make_set(codes);
}

std::string write_stage_trace(const FixpointTrace& trace, const Universe& u) {
  std::ostringstream out;
  CodeSet previous(u.size());
  for (const auto& stage : trace.stages) {
    out << stage.index << '\t' << to_string(stage.origin) << '\t' << join_codes(u.codes_of(stage.set - previous))
        << '\n';
    previous = stage.set;
  }
  return out.str();
}

std::string write_round_trace(const std::vector<RoundLine>& lines) {
  std::ostringstream out;
  for (const auto& l : lines) out << l.round << '\t' << l.rule << '\t' << l.code.to_string() << '\n';
  return out.str();
}

Reserialized reserialize(const std::string& text) {
  auto lines = lines_of(text);
  if (lines.empty()) return {Kind::CodeList, text};
  auto fields = split(lines.front(), '\t');
  switch (fields.size()) {
    case 1: return {Kind::CodeList, write_codes(read_codes(text))};
    case 2: return {Kind::Universe, write_universe(read_universe(text))};
    case 3:
      if (looks_like_origin(fields[1])) return {Kind::StageTrace, reserialize_stage_trace(lines)};
      return {Kind::RoundTrace, reserialize_round_trace(lines)};
    default: throw ArtifactFormatError("unrecognized artifact layout");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArtifactFormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ArtifactFormatError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw ArtifactFormatError("write failed: " + path.string());
}

}  // namespace truthpred::artifacts
