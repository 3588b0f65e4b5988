#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wtrace/traceh.hpp"
#include "wtrace/walgebra.hpp"
#include "wtrace_tool/cli.hpp"

namespace wtrace::tool {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wtrace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const std::string& value) : name_(name) { ::setenv(name, value.c_str(), 1); }
  ~ScopedEnv() { ::unsetenv(name_); }
  ScopedEnv(const ScopedEnv&) = delete;
  ScopedEnv& operator=(const ScopedEnv&) = delete;

 private:
  const char* name_;
};

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wtrace_cli_test_" + name);
}

TEST(Cli, EvalCreation) {
  const auto r = run({"eval", "w:-2,0", "vacuum"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(fock_from_json(j.at("result")), FockVector::basis(Partition{2}));
}

TEST(Cli, EvalCompositionOrder) {
  // "A B" applies B first: w(1,0) w(-1,0) on vacuum is 1, the other order is 0.
  const auto ab = Json::parse(run({"eval", "w:1,0 w:-1,0", "vacuum"}).out);
  EXPECT_EQ(fock_from_json(ab.at("result")), FockVector::vacuum());
  const auto ba = Json::parse(run({"eval", "w:-1,0 w:1,0", "vacuum"}).out);
  EXPECT_TRUE(fock_from_json(ba.at("result")).is_zero());
}

TEST(Cli, QuotientGeneratorIsUsageError) {
  EXPECT_EQ(run({"eval", "w:0,0", "vacuum"}).code, 2);
  EXPECT_EQ(run({"eval", "h:0,1", "vacuum"}).code, 2);
  EXPECT_EQ(run({"eval", "z:1", "vacuum"}).code, 2);
  EXPECT_EQ(run({"eval", "w:1,0", "{not json"}).code, 2);
}

TEST(Cli, BadFlagsAndRanges) {
  EXPECT_EQ(run({"verify", "--frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "series", "--max-degree", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "series", "--max-degree", "99"}).code, 2);
  EXPECT_EQ(run({"verify", "series", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, CommutatorResolve) {
  const auto r = run({"commutator", "h:-1,0", "h:1,2", "--resolve", "c:0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto res = Json::parse(r.out).at("resolution");
  EXPECT_EQ(res.at("resolved"), true);
  EXPECT_EQ(res.at("coeffs"), Json::parse(R"(["2"])"));
}

TEST(Cli, CommutatorResolveRangeAndFailure) {
  const auto r = run({"commutator", "w:-1,1", "w:-1,0", "--resolve", "w:-2,0..w:-2,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto res = Json::parse(r.out).at("resolution");
  EXPECT_EQ(res.at("basis").size(), 3U);
  const auto miss = run({"commutator", "w:-1,1", "w:-1,0", "--resolve", "w:-2,1"});
  EXPECT_EQ(miss.code, 1);
  EXPECT_EQ(Json::parse(miss.out).at("resolution").at("resolved"), false);
  EXPECT_EQ(run({"commutator", "w:-1,1", "w:-1,0", "--resolve", "w:-1,0"}).code, 2);
}

TEST(Cli, ParseResolveList) {
  const auto items = parse_resolve_list("w:-1,0..w:-1,2; c:0");
  ASSERT_EQ(items.size(), 4U);
  EXPECT_EQ(items[0].first, "w:-1,0");
  EXPECT_EQ(items[2].first, "w:-1,2");
  EXPECT_EQ(items[3].first, "c:0");
  EXPECT_THROW(parse_resolve_list("w:-1,0..w:-2,2"), UsageError);
}

TEST(Cli, GeneratorParsing) {
  EXPECT_TRUE(equal_up_to(parse_generator("L:1"), virasoro_bar(1), 5));
  EXPECT_TRUE(equal_up_to(parse_generator("ct:2"), c(0), 5));
  EXPECT_EQ(parse_generator("p:3").rank(), 3);
  EXPECT_EQ(parse_generator("q:2").rank(), -2);
  EXPECT_EQ(parse_generator("b:2").rank(), -2);
  EXPECT_THROW(parse_generator("b:0"), UsageError);
  EXPECT_THROW(parse_generator("w:1"), UsageError);
  EXPECT_THROW(parse_generator("w:1,-1"), UsageError);
}

TEST(Cli, Poincare) {
  const auto r = run({"poincare", ">", "5", "3", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("equal"), true);
  const auto neg = run({"poincare", "<", "4", "2", "both"});
  EXPECT_EQ(neg.code, 0);
  EXPECT_EQ(run({"poincare", "=", "4", "2"}).code, 2);
  EXPECT_EQ(run({"poincare", ">", "99", "2"}).code, 2);
}

TEST(Cli, DahaDims) {
  const auto r = run({"daha-dims", "--n", "2", "--max-degree", "4", "--buffer", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("cocenter").at("dims"), Json::parse("[2,2,3,3,4]"));
  EXPECT_EQ(j.at("cocenter").at("stabilized"), true);
  EXPECT_EQ(j.at("matches_hhsd"), true);
}

TEST(Cli, PsiLeading) {
  const auto r = run({"psi-leading", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("coeffs"), Json::parse(R"(["0","-1"])"));
}

TEST(Cli, VerifyIsDeterministicAcrossJobs) {
  const auto one = run({"verify", "series", "--jobs", "1"});
  const auto four = run({"verify", "series", "--jobs", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, run({"verify", "series", "--jobs", "1"}).out);
}

TEST(Cli, OutFileAndVerbose) {
  const auto path = temp_file("out.json");
  std::filesystem::remove(path);
  const auto r = run({"verify", "pq", "--max-degree", "4", "--out", path.string(), "-v"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = Json::parse(in);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(j.at("config").at("max_degree"), 4);
  EXPECT_NE(r.err.find("passed"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ConfigFromEnvironment) {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << R"({"max_degree": 3, "mn_max": 2})";
  }
  {
    ScopedEnv env(kConfigEnv, path.string());
    const auto cfg = default_config();
    EXPECT_EQ(cfg.max_degree, 3);
    EXPECT_EQ(cfg.mn_max, 2);
    const auto r = run({"verify", "pq"});
    EXPECT_EQ(Json::parse(r.out).at("config").at("max_degree"), 3);
    // Flags override the file.
    EXPECT_EQ(Json::parse(run({"verify", "pq", "--max-degree", "5"}).out).at("config").at("max_degree"), 5);
  }
  {
    std::ofstream f(path);
    f << "{broken";
  }
  {
    ScopedEnv env(kConfigEnv, path.string());
    EXPECT_THROW(default_config(), UsageError);
    EXPECT_EQ(run({"verify", "pq"}).code, 2);
  }
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace wtrace::tool
