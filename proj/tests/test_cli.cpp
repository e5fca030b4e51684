#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ftq/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ftq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ftq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GroupInfo) {
  auto r = run({"group-info", "--family", "AGL1", "-p", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["order"], 20);
  EXPECT_EQ(r.json()["class_count"], 5);
  r = run({"group-info", "--family", "U3", "-p", "2"});
  EXPECT_EQ(r.json()["order"], 8);
  EXPECT_EQ(r.json()["class_count"], 5);
}

TEST(Cli, Census) {
  auto r = run({"census", "--family", "AGL1", "-p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto census = r.json()["census"];
  ASSERT_EQ(census.size(), 2u);
  EXPECT_EQ(census[0]["dim"], "1");
  EXPECT_EQ(census[0]["count"], "2");
  EXPECT_EQ(census[1]["dim"], "2");
  EXPECT_EQ(census[1]["count"], "1");
  r = run({"census", "--family", "U4", "-p", "2"});
  ASSERT_EQ(r.code, 0);
  for (const auto& e : r.json()["census"]) EXPECT_TRUE(e["dim"] == "1" || e["dim"] == "2" || e["dim"] == "4");
}

TEST(Cli, Count) {
  auto r = run({"count", "--family", "AGL1", "-p", "3", "-g", "2", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["count"], "486");
  EXPECT_EQ(r.json()["oracle"], "486");
  EXPECT_EQ(run({"count", "--family", "U3", "-p", "2", "-g", "1"}).json()["count"], "40");
  r = run({"count", "--family", "AGL1", "-p", "3", "-g", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["count"], "1");
  EXPECT_FALSE(r.err.empty());  // warning about the unvalidated regime
  r = run({"count", "--family", "AGL1", "-p", "3", "-g", "2", "--format", "table"});
  EXPECT_NE(r.out.find("486"), std::string::npos);
}

TEST(Cli, Matrix) {
  auto r = run({"matrix", "--family", "AGL1", "-p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["matrix"], nlohmann::json::array({nlohmann::json::array({"18", "18"}), nlohmann::json::array({"9", "27"})}));
  r = run({"matrix", "--family", "AGL1", "--primes", "2,3,5,7,11", "--validate", "13"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["entries"][1][1], "q^4-3*q^3+3*q^2");
  // Four primes cannot determine the quartic entries.
  r = run({"matrix", "--family", "AGL1", "--primes", "3,5,7,11", "--validate", "13"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("ValidationFailed"), std::string::npos);
  r = run({"matrix", "--family", "U3", "-p", "2", "--generators", "E,Zstar,Z"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("DependentGenerators"), std::string::npos);
}

TEST(Cli, Eval) {
  auto r = run({"eval", "sigma(2)", "--family", "AGL1", "-p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["value"], "81");
  EXPECT_EQ(run({"eval", "counit . unit"}).json()["value"], "1/6");
  EXPECT_EQ(run({"eval", "mult . unit"}).code, 2);
  EXPECT_EQ(run({"eval", "mult . "}).code, 2);
  EXPECT_EQ(run({"eval", "id * id * id * id", "--family", "U3", "-p", "3"}).code, 4);
}

TEST(Cli, VerifySuites) {
  for (const char* suite : {"paper", "axioms", "spans"}) {
    const auto r = run({"verify", "--suite", suite});
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out << r.err;
  }
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
}

TEST(Cli, Catalog) {
  const auto r = run({"catalog"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json().size(), 4u);
}

TEST(Cli, UserSpecFile) {
  const std::string path = ::testing::TempDir() + "ftq_spec.json";
  std::ofstream(path) << R"({
    "families": [{"name": "Ga", "dim": 2, "pattern": [[1, "t"], [0, 1]], "generators": [{"t": 1}], "basis": ["O"]}],
    "generators": [{"family": "Ga", "name": "O", "coords": 0, "map": [[1, 0], [0, 1]]}],
    "lifts": []})";
  const auto r = run({"group-info", "--spec", path, "--family", "Ga", "-p", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["order"], 5);
  EXPECT_EQ(run({"group-info", "--spec", path + ".missing", "--family", "Ga", "-p", "5"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"group-info", "--family", "NOPE", "-p", "3"}).code, 2);
  EXPECT_EQ(run({"group-info", "--family", "AGL1", "-p", "4"}).code, 2);
  EXPECT_EQ(run({"group-info", "--family", "GmZ2", "-p", "2"}).code, 2);
  EXPECT_EQ(run({"group-info", "--family", "U4", "-p", "3", "--cap-order", "100"}).code, 4);
  EXPECT_EQ(ftq::cli::exit_code(ftq::ErrorCategory::Mathematical), 3);
}
