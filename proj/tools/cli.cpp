#include "cli.hpp"

#include "artifacts.hpp"
#include "truthpred/classifier.hpp"
#include "truthpred/errors.hpp"
#include "truthpred/fixpoint.hpp"
#include "truthpred/parser.hpp"
#include "truthpred/truth_operator.hpp"
#include "truthpred/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace truthpred::cli {

namespace {

struct RunConfig {
  std::string command;
  fs::path dir = ".";
  std::string seeds_file;
  unsigned depth = 1;
  unsigned t_depth = 0;
  unsigned numeric_bound = 16;
  std::size_t budget = 200000;
  std::string connectives = "all";
  std::string seed = "empty";
  unsigned jobs = 1;
  std::string sentence;
  std::string input;
  std::string export_to;
  std::size_t samples = 100;
  std::uint64_t rng_seed = 1;
  double density = 0.3;
};

std::vector<std::string> read_seed_sentences(const fs::path& path) {
  std::vector<std::string> seeds;
  std::istringstream in(artifacts::read_file(path));
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    seeds.push_back(line.substr(first, last - first + 1));
  }
  return seeds;
}

UniverseParams params_of(const RunConfig& cfg) {
  UniverseParams p;
  p.base.seed_sentences = read_seed_sentences(cfg.seeds_file);
  p.base.numeric_bound = cfg.numeric_bound;
  p.depth = cfg.depth;
  p.t_depth = cfg.t_depth;
  p.budget = cfg.budget;
  try {
    p.connectives = ConnectiveSet::parse(cfg.connectives);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--connectives", e.what());
  }
  return p;
}

Universe load_universe(const RunConfig& cfg) {
  if (!cfg.seeds_file.empty()) return Universe::build(params_of(cfg));
  return artifacts::read_universe(artifacts::read_file(cfg.dir / artifacts::kUniverseFile));
}

CodeSet seed_set(const RunConfig& cfg, const Universe& u) {
  if (cfg.seed == "empty") return u.empty_set();
  if (cfg.seed == "W") return u.true_base();
  return artifacts::read_code_set(artifacts::read_file(cfg.seed), u);
}

int do_build(const RunConfig& cfg, std::ostream& out) {
  Universe u = Universe::build(params_of(cfg));
  fs::create_directories(cfg.dir);
  artifacts::write_file(cfg.dir / artifacts::kUniverseFile, artifacts::write_universe(u));
  artifacts::write_file(cfg.dir / artifacts::kTrueBaseFile, artifacts::write_codes(u.codes_of(u.true_base())));
  out << "universe " << u.size() << " sentences, " << u.true_base().count() << " true base sentences\n";
  return 0;
}

int do_fixpoint(const RunConfig& cfg, std::ostream& out) {
  Universe u = load_universe(cfg);
  FixpointTrace trace = least_fixed_point(seed_set(cfg, u), u);
  fs::create_directories(cfg.dir);
  artifacts::write_file(cfg.dir / artifacts::kFixpointFile, artifacts::write_codes(u.codes_of(trace.final)));
  artifacts::write_file(cfg.dir / artifacts::kTraceFile, artifacts::write_stage_trace(trace, u));
  out << "fixed point " << trace.final.count() << " of " << u.size() << " sentences after " << trace.stages.size()
      << " stages\n";
  return 0;
}

int do_classify(const RunConfig& cfg, std::ostream& out) {
  Sentence s = parse_sentence(cfg.sentence);
  Universe u = load_universe(cfg);
  CodeSet fixed = cfg.seed == "empty" && cfg.seeds_file.empty()
                      ? artifacts::read_code_set(artifacts::read_file(cfg.dir / artifacts::kFixpointFile), u)
                      : least_fixed_point(seed_set(cfg, u), u).final;
  OperatorResult r = apply_truth_operator(fixed, u);
  Verdict v = classify(s, r, u);
  SentenceId id = u.id_of(s.code());
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  out << to_string(v) << '\n';
  out << "code\t" << s.code().to_string() << '\n';
  out << "in-truths\t" << yes_no(r.truths.contains(id)) << '\n';
  out << "in-falsities\t" << yes_no(r.falsities.contains(id)) << '\n';
  if (SentenceId neg = u.negation(id); neg != Universe::npos)
    out << "negation\t" << u.code(neg).to_string() << '\t' << yes_no(r.truths.contains(neg)) << '\n';
  return 0;
}

int do_trace(const RunConfig& cfg, std::ostream& out) {
  Universe u = load_universe(cfg);
  OperatorResult r = apply_truth_operator(seed_set(cfg, u), u);
  std::vector<artifacts::RoundLine> lines;
  for (const auto& a : r.additions) lines.push_back({a.round, a.rule, u.code(a.id)});
  out << artifacts::write_round_trace(lines);
  return 0;
}

// One verified set: its rule report plus the oracle and lemma outcomes. The
// oracle and the lemmas presuppose a consistent set; for any other set only
// the rules are checked.
struct SetCheck {
  std::string label;
  RuleReport report;
  bool consistent = false;
  bool oracle_agrees = false;
  bool disjoint = false;
  bool preserves_consistency = false;
  bool ok() const {
    return report.all_passed() && (!consistent || (oracle_agrees && disjoint && preserves_consistency));
  }
};

SetCheck check_set(const Verifier& v, std::string label, const CodeSet& set) {
  SetCheck c;
  c.label = std::move(label);
  OperatorResult r = apply_truth_operator(set, v.universe());
  c.report = v.verify_rules_on(r.truths, r.falsities, set);
  c.consistent = v.consistent(set);
  if (!c.consistent) return c;
  c.oracle_agrees = v.oracle(set) == TruthPair{r.truths, r.falsities};
  c.disjoint = v.disjointness(set);
  c.preserves_consistency = v.consistency_preservation(set);
  return c;
}

int do_verify(const RunConfig& cfg, std::ostream& out) {
  Universe u = load_universe(cfg);
  Verifier v(u);
  FixpointTrace least = least_fixed_point(u.empty_set(), u);

  std::vector<std::pair<std::string, CodeSet>> sets = {
      {"empty", u.empty_set()}, {"W", u.true_base()}, {"lfp", least.final}};
  if (cfg.seed != "empty") sets.emplace_back(cfg.seed, seed_set(cfg, u));
  std::mt19937_64 rng(cfg.rng_seed);
  for (std::size_t i = 0; i < cfg.samples; ++i)
    sets.emplace_back("random-" + std::to_string(i), v.random_consistent_subset(rng, cfg.density));

  std::vector<SetCheck> checks(sets.size());
  std::vector<std::exception_ptr> failures(sets.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(sets.size())));
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < sets.size(); i += jobs) try {
          checks[i] = check_set(v, sets[i].first, sets[i].second);
        } catch (...) {
          failures[i] = std::current_exception();
        }
    });
  for (auto& t : workers) t.join();
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  bool chain_ok = true;
  std::vector<CodeSet> prefix;
  for (const auto& stage : least.stages) {
    prefix.push_back(stage.set);
    chain_ok = chain_ok && v.chain_union(prefix);
  }

  bool all_ok = chain_ok;
  std::size_t failed_sets = 0;
  for (const auto& c : checks) {
    if (c.ok()) continue;
    all_ok = false;
    ++failed_sets;
  }
  // Full tables for the named sets; the random samples are summarized.
  for (const auto& c : checks) {
    if (c.label.rfind("random-", 0) == 0 && c.ok()) continue;
    out << "== " << c.label << " ==\n" << format_table(c.report);
    if (c.consistent)
      out << "oracle " << (c.oracle_agrees ? "agrees" : "DIFFERS") << ", disjoint " << (c.disjoint ? "yes" : "NO")
          << ", consistent " << (c.preserves_consistency ? "yes" : "NO") << "\n\n";
    else
      out << "set is inconsistent; oracle and lemma checks do not apply\n\n";
  }
  out << "random sets checked: " << cfg.samples << ", chain union over " << least.stages.size() << " stages: "
      << (chain_ok ? "holds" : "FAILS") << ", failing sets: " << failed_sets << "\n\n";

  // Machine-readable lines, merged over every checked set.
  RuleReport merged = checks.front().report;
  for (const auto& c : checks)
    for (std::size_t i = 0; i < merged.rules.size(); ++i) {
      auto& m = merged.rules[i];
      const auto& r = c.report.rules[i];
      m.checked += (&c == &checks.front()) ? 0 : r.checked;
      if (m.passed() && !r.passed()) m.counterexample = r.counterexample;
    }
  out << format_lines(merged);
  return all_ok ? 0 : 1;
}

int do_export(const RunConfig& cfg, std::ostream& out) {
  auto result = artifacts::reserialize(artifacts::read_file(cfg.input));
  if (cfg.export_to.empty())
    out << result.text;
  else
    artifacts::write_file(cfg.export_to, result.text);
  return 0;
}

void add_universe_options(CLI::App& sub, RunConfig& cfg, bool seeds_required) {
  auto* seeds = sub.add_option("--seeds", cfg.seeds_file, "File of base sentences, one per line")->check(CLI::ExistingFile);
  if (seeds_required) seeds->required();
  sub.add_option("--depth", cfg.depth, "Connective depth of the universe")->check(CLI::Range(1u, 16u));
  sub.add_option("--t-depth", cfg.t_depth, "Connective depth of sentences that receive T-atoms");
  sub.add_option("--numeric-bound", cfg.numeric_bound, "Largest quantifier bound allowed in a seed");
  sub.add_option("--budget", cfg.budget, "Maximum number of sentences")->check(CLI::PositiveNumber);
  sub.add_option("--connectives", cfg.connectives, "Comma list of not,or,and,implies,iff, or 'all'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Grounded truth predicate over a finite fragment of arithmetic", "truthpred"};
  app.require_subcommand(1, 1);
  app.add_option("--out", cfg.dir, "Artifact directory")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.fallthrough();

  auto* build = app.add_subcommand("build", "Build the universe and its true base sentences");
  add_universe_options(*build, cfg, true);

  auto* fixpoint = app.add_subcommand("fixpoint", "Iterate the truth operator to its least fixed point above a seed");
  fixpoint->add_option("--seed", cfg.seed, "empty, W, or a file of codes")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a sentence at the stored fixed point");
  classify_cmd->add_option("sentence", cfg.sentence, "Sentence text")->required();
  classify_cmd->add_option("--seed", cfg.seed, "Recompute the fixed point from this seed instead");

  auto* trace = app.add_subcommand("trace", "Print the operator's additions round by round");
  trace->add_option("--seed", cfg.seed, "empty, W, or a file of codes")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check the rules, the oracle and the lemmas");
  add_universe_options(*verify, cfg, false);
  verify->add_option("--seed", cfg.seed, "Also verify this set (W or a file of codes)");
  verify->add_option("--samples", cfg.samples, "Random consistent sets to check")->capture_default_str();
  verify->add_option("--rng-seed", cfg.rng_seed, "Seed for the random sets")->capture_default_str();
  verify->add_option("--density", cfg.density, "Sampling probability per sentence")->check(CLI::Range(0.0, 1.0));

  auto* export_cmd = app.add_subcommand("export", "Re-serialize an artifact file in canonical form");
  export_cmd->add_option("file", cfg.input, "Artifact file")->required()->check(CLI::ExistingFile);
  export_cmd->add_option("--to", cfg.export_to, "Write here instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* which = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << which->help();
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.command == "build") return do_build(cfg, out);
    if (cfg.command == "fixpoint") return do_fixpoint(cfg, out);
    if (cfg.command == "classify") return do_classify(cfg, out);
    if (cfg.command == "trace") return do_trace(cfg, out);
    if (cfg.command == "verify") return do_verify(cfg, out);
    return do_export(cfg, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << cfg.command << ": " << e.what() << '\n';
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << cfg.command << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace truthpred::cli
