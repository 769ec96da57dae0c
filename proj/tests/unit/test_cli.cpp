#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "spectra/cli.hpp"

namespace spectra::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "spectra");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SPECTRA_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("SPECTRA_SEED"); }
  fs::path scratch() const {
    fs::path p = fs::temp_directory_path() / ("spectra_cli_" + std::string(
        ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(p);
    return p;
  }
};

TEST_F(Cli, VerifyThm2Passes) {
  const Result r = invoke({"verify", "--checker", "thm2", "--dim", "6", "--p", "2", "--trials", "30", "--seed", "42"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("thm2,low_rank_perturbation,random,6,2,42,30,30,0,0,"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyProp2KatoReportsExpectedViolations) {
  setenv("SPECTRA_SEED", "5", 1);
  const Result r = invoke({"verify", "--checker", "kato", "--p", "0.5", "--family", "prop2", "--trials", "10"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find(",0,10,"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyRequiresSeed) {
  const Result r = invoke({"verify", "--checker", "thm3", "--trials", "5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("seed"), std::string::npos);
}

TEST_F(Cli, VerifyFailuresAreSerialized) {
  const fs::path out = scratch() / "verify.csv";
  const Result r = invoke({"verify", "--checker", "thm2", "--dim", "4", "--trials", "20", "--seed", "1",
                           "--tol-rel", "-0.99", "--out", out.string()});
  EXPECT_EQ(r.code, kExitRegression);
  const auto failures = nlohmann::json::parse(slurp(out.string() + ".failures.json"));
  ASSERT_EQ(failures.size(), 1u);
  EXPECT_EQ(failures[0].at("checker"), "thm2");
  EXPECT_EQ(failures[0].at("A").at("dim"), 4);
}

TEST_F(Cli, ConfigFileAndFlagPrecedence) {
  const Result from_file = invoke({"verify", "--config", data("verify_config.json"), "--format", "json"});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  const auto j = nlohmann::json::parse(from_file.out);
  EXPECT_EQ(j.at("runs")[0].at("trials"), 25);
  EXPECT_EQ(j.at("runs")[0].at("seed"), 9);
  const Result overridden = invoke({"verify", "--config", data("verify_config.json"), "--trials", "3", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(overridden.out).at("runs")[0].at("trials"), 3);
}

TEST_F(Cli, BadConfigsExitTwo) {
  EXPECT_EQ(invoke({"verify", "--config", data("malformed_config.json")}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--config", data("unknown_field_config.json")}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--config", data("does_not_exist.json")}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--checker", "thm3", "--kind", "ginibre", "--seed", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--checker", "nope", "--seed", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--bogus-flag"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gallery", "--all", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
}

TEST_F(Cli, GalleryExampleOneRow) {
  const Result r = invoke({"gallery", "--case", "example1", "--x", "0.25", "--p", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("example1,x=0.25;p=2,8,"), std::string::npos) << r.out;
}

TEST_F(Cli, GalleryProp2LimitRow) {
  const Result r = invoke({"gallery", "--case", "prop2", "--n", "4", "--p", "0.5", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto c = nlohmann::json::parse(r.out).at("cases")[0];
  EXPECT_EQ(c.at("closed_form"), 2.0);
  EXPECT_NEAR(c.at("computed").get<double>(), 2.0, 1e-2);
}

TEST_F(Cli, GalleryAllTable) {
  const Result r = invoke({"gallery", "--all"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  EXPECT_EQ(lines, 12u);  // header + 11 cases
  EXPECT_EQ(r.out.find(",0\n"), std::string::npos) << "a case failed to match";
}

TEST_F(Cli, GalleryRegressionExitsOne) {
  const Result r = invoke({"gallery", "--case", "prop2", "--n", "4", "--tol-rel", "0", "--tol-abs", "0"});
  EXPECT_EQ(r.code, kExitRegression);
  EXPECT_NE(r.err.find("regression"), std::string::npos);
}

TEST_F(Cli, JacobiSpecFile) {
  const Result r = invoke({"jacobi", "--spec", data("bump_b0_3.json"), "--p", "1", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  bool saw_bound = false, saw_lt = false;
  for (const auto& rep : j.at("reports")) {
    saw_bound = saw_bound || rep.at("name") == "bound15";
    saw_lt = saw_lt || rep.at("name") == "lt-nonselfadjoint";
    EXPECT_NE(rep.at("verdict"), "FAIL");
  }
  EXPECT_TRUE(saw_bound);
  EXPECT_TRUE(saw_lt);
  EXPECT_EQ(j.at("weights").size(), 1u);
  EXPECT_EQ(j.at("stability").size(), 3u);
  EXPECT_EQ(invoke({"jacobi"}).code, kExitUsage);
}

TEST_F(Cli, ConstantsAnchors) {
  const Result r = invoke({"constants", "--d", "1", "--p", "1", "--kappa", "0.5", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto row = nlohmann::json::parse(r.out).at("rows")[0];
  EXPECT_NEAR(row.at("c0").at("closed_form").get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(row.at("c1").at("closed_form").get<double>(), 2.0 * 3.14159265358979323846, 1e-13);
  EXPECT_EQ(invoke({"constants", "--d", "2", "--p", "0.9"}).code, kExitUsage);
}

TEST_F(Cli, OutputIsDeterministic) {
  const fs::path dir = scratch();
  for (const char* name : {"a.json", "b.json"}) {
    const Result r = invoke({"verify", "--checker", "heat", "--dim", "5", "--p", "0.5", "--trials", "20", "--seed",
                             "77", "--format", "json", "--out", (dir / name).string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
  EXPECT_FALSE(slurp(dir / "a.json").empty());
}

}  // namespace
}  // namespace spectra::cli
