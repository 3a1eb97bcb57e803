#include "artifacts.hpp"
#include "cli.hpp"
#include "truthpred/errors.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace fs = std::filesystem;
using truthpred::cli::run;

namespace {

fs::path fixture(const char* name) {
  const char* dir = std::getenv("TRUTHPRED_FIXTURES");
  return fs::path(dir ? dir : "fixtures") / name;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("truthpred-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result build_and_fix(const fs::path& dir) {
    Result b = invoke({"build", "--seeds", fixture("f1.txt").string(), "--depth", "1", "--t-depth", "0", "--out",
                       dir.string()});
    if (b.code != 0) return b;
    return invoke({"fixpoint", "--seed", "empty", "--out", dir.string()});
  }

  std::string slurp(const fs::path& p) { return truthpred::artifacts::read_file(p); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, F1EndToEnd) {
  ASSERT_EQ(build_and_fix(dir_).code, 0);
  Result t = invoke({"classify", "T(785)", "--out", dir_.string()});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.substr(0, t.out.find('\n')), "true");
  EXPECT_NE(t.out.find("in-truths\tyes"), std::string::npos);

  Result f = invoke({"classify", "Ax T(x)", "--out", dir_.string()});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.substr(0, f.out.find('\n')), "false");

  Result u = invoke({"classify", "(T(785)) <-> (T(12562))", "--out", dir_.string()});
  EXPECT_EQ(u.code, 1);
}

TEST_F(CliTest, ArtifactsHaveTheDocumentedShape) {
  ASSERT_EQ(build_and_fix(dir_).code, 0);
  std::string universe = slurp(dir_ / "universe.txt");
  EXPECT_EQ(universe.substr(0, universe.find('\n')), "3\tEx T(x)");
  EXPECT_EQ(std::count(universe.begin(), universe.end(), '\n'), 1326);
  std::string w = slurp(dir_ / "w.txt");
  EXPECT_EQ(std::count(w.begin(), w.end(), '\n'), 11);
  EXPECT_EQ(w.substr(0, 4), "785\n");
  std::string fixed = slurp(dir_ / "fixpoint.txt");
  EXPECT_EQ(std::count(fixed.begin(), fixed.end(), '\n'), 744);
  std::string trace = slurp(dir_ / "trace.txt");
  EXPECT_EQ(trace.substr(0, trace.find('\n')), "0\tseed\t");
  EXPECT_EQ(trace.substr(trace.find("\n3\t") + 1, 20), "3\tG-step\t50,82,1063,");
}

TEST_F(CliTest, ExportRoundTripsEveryArtifact) {
  ASSERT_EQ(build_and_fix(dir_).code, 0);
  Result rounds = invoke({"trace", "--seed", "W", "--out", dir_.string()});
  ASSERT_EQ(rounds.code, 0);
  truthpred::artifacts::write_file(dir_ / "rounds.txt", rounds.out);
  for (auto name : {"universe.txt", "w.txt", "fixpoint.txt", "trace.txt", "rounds.txt"}) {
    Result e = invoke({"export", (dir_ / name).string()});
    EXPECT_EQ(e.code, 0) << name << e.err;
    EXPECT_EQ(e.out, slurp(dir_ / name)) << name;
  }
  EXPECT_EQ(invoke({"export", (dir_ / "w.txt").string(), "--to", (dir_ / "copy.txt").string()}).code, 0);
  EXPECT_EQ(slurp(dir_ / "copy.txt"), slurp(dir_ / "w.txt"));
}

TEST_F(CliTest, ExportDetectsKinds) {
  using truthpred::artifacts::Kind;
  using truthpred::artifacts::reserialize;
  EXPECT_EQ(reserialize("").kind, Kind::CodeList);
  EXPECT_EQ(reserialize("3\n785\n").kind, Kind::CodeList);
  EXPECT_EQ(reserialize("785\t0=0\n12567\t!(0=0)\n").kind, Kind::Universe);
  EXPECT_EQ(reserialize("0\tseed\t\n1\tG-step\t3,5\n").kind, Kind::StageTrace);
  EXPECT_EQ(reserialize("0\t0\t785\n1\t3\t790\n").kind, Kind::RoundTrace);
  EXPECT_THROW(reserialize("785\n3\n"), truthpred::ArtifactFormatError);
  EXPECT_THROW(reserialize("785"), truthpred::ArtifactFormatError);
  EXPECT_THROW(reserialize("786\t0=0\n"), truthpred::ArtifactFormatError);
  EXPECT_THROW(reserialize("785\t0 = 0\n12567\t!(0=0)\n"), truthpred::ArtifactFormatError);
  EXPECT_THROW(reserialize("1\tseed\t\n"), truthpred::ArtifactFormatError);
  EXPECT_THROW(reserialize("0\t12\t785\n"), truthpred::ArtifactFormatError);
}

TEST_F(CliTest, Deterministic) {
  fs::path a = dir_ / "a", b = dir_ / "b";
  ASSERT_EQ(build_and_fix(a).code, 0);
  ASSERT_EQ(build_and_fix(b).code, 0);
  for (auto name : {"universe.txt", "w.txt", "fixpoint.txt", "trace.txt"}) EXPECT_EQ(slurp(a / name), slurp(b / name));
  EXPECT_EQ(invoke({"trace", "--out", a.string()}).out, invoke({"trace", "--out", b.string()}).out);
  EXPECT_EQ(invoke({"verify", "--out", a.string(), "--jobs", "1"}).out,
            invoke({"verify", "--out", b.string(), "--jobs", "4"}).out);
}

TEST_F(CliTest, TracePrintsRounds) {
  ASSERT_EQ(build_and_fix(dir_).code, 0);
  Result r = invoke({"trace", "--out", dir_.string()});
  ASSERT_EQ(r.code, 0);
  // 11 initial members, then 64 compounds in round 1.
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 75);
  EXPECT_EQ(r.out.substr(0, 8), "0\t0\t785\n");
}

TEST_F(CliTest, VerifyShippedFixtures) {
  Result f1 = invoke({"verify", "--seeds", fixture("f1.txt").string(), "--samples", "20"});
  EXPECT_EQ(f1.code, 0) << f1.out;
  EXPECT_NE(f1.out.find("r11\tpass\t-\n"), std::string::npos);
  Result f2 = invoke({"verify", "--seeds", fixture("f2.txt").string(), "--t-depth", "1", "--connectives",
                      "not,implies", "--samples", "5", "--jobs", "2"});
  EXPECT_EQ(f2.code, 0) << f2.out;
}

TEST_F(CliTest, VerifyReportsFailuresWithExitOne) {
  ASSERT_EQ(build_and_fix(dir_).code, 0);
  std::string all = slurp(dir_ / "universe.txt");
  std::string codes;
  std::istringstream in(all);
  for (std::string line; std::getline(in, line);) codes += line.substr(0, line.find('\t')) + "\n";
  truthpred::artifacts::write_file(dir_ / "everything.txt", codes);
  Result r = invoke({"verify", "--out", dir_.string(), "--seed", (dir_ / "everything.txt").string(), "--samples", "0"});
  // Every member at once: the truncation's known quantifier failures.
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("r8\tfail\t3\n"), std::string::npos);
  EXPECT_NE(r.out.find("r11\tfail\t6\n"), std::string::npos);
  EXPECT_NE(r.out.find("r4\tpass\t-\n"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"build"}).code, 2);
  EXPECT_EQ(invoke({"build", "--seeds", fixture("f1.txt").string(), "--depth", "0"}).code, 2);
  EXPECT_EQ(invoke({"build", "--seeds", fixture("f1.txt").string(), "--connectives", "or"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);

  Result budget = invoke({"build", "--seeds", fixture("f1.txt").string(), "--budget", "100", "--out", dir_.string()});
  EXPECT_EQ(budget.code, 1);
  EXPECT_NE(budget.err.find("budget"), std::string::npos);

  ASSERT_EQ(build_and_fix(dir_).code, 0);
  truthpred::artifacts::write_file(dir_ / "unsound.txt", "4\n");
  Result unsound = invoke({"fixpoint", "--seed", (dir_ / "unsound.txt").string(), "--out", dir_.string()});
  EXPECT_EQ(unsound.code, 1);
  EXPECT_NE(unsound.err.find("truth closure"), std::string::npos);
  EXPECT_EQ(invoke({"classify", "0=", "--out", dir_.string()}).code, 1);
  EXPECT_EQ(invoke({"classify", "0=0", "--out", (dir_ / "missing").string()}).code, 1);
}
