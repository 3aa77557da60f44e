#include <gtest/gtest.h>

#include <fstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace cqg;

namespace {

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cqg");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  return cli::run(static_cast<int>(args.size()), argv.data());
}

Json read_json(const std::string& path) {
  std::ifstream is(path);
  return Json::parse(is);
}

}  // namespace

TEST(CliHelpers, StripTiming) {
  const Json doc = Json::parse(
      R"({"a":1,"elapsed_ms":3.5,"content_hash":"x","b":[{"elapsed_ms":1,"c":2}],"d":{"elapsed_ms":0}})");
  EXPECT_EQ(cli::strip_timing(doc), Json::parse(R"({"a":1,"b":[{"c":2}],"d":{}})"));
}

TEST(CliHelpers, ContentHashIgnoresTiming) {
  Json a = Json::parse(R"({"x":[1,2,3],"elapsed_ms":10})");
  Json b = Json::parse(R"({"x":[1,2,3],"elapsed_ms":99,"content_hash":"old"})");
  EXPECT_EQ(cli::content_hash(a), cli::content_hash(b));
  EXPECT_EQ(cli::content_hash(a).size(), 64u);
  b["x"][0] = 4;
  EXPECT_NE(cli::content_hash(a), cli::content_hash(b));
  // SHA-256 of "{}"
  EXPECT_EQ(cli::content_hash(Json::object()),
            "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
}

TEST(CliHelpers, Csv) {
  const Json records = Json::parse(
      R"([{"a":1,"config":{"q":0.5},"b":"x,y"},{"a":2,"c":true}])");
  EXPECT_EQ(cli::to_csv(records), "a,b,c\n1,\"x,y\",\n2,,true\n");
}

TEST(CliRun, ExitCodes) {
  EXPECT_EQ(run_cli({"--help"}), 0);
  EXPECT_EQ(run_cli({"no-such-command"}), 2);
  EXPECT_EQ(run_cli({"characters", "--bogus"}), 2);
  EXPECT_EQ(run_cli({"pairing"}), 2);  // stochastic without --seed
  EXPECT_EQ(run_cli({"all"}), 2);
  EXPECT_EQ(run_cli({"plancherel", "--seed", "1", "--dual", "nonsense"}), 2);
  EXPECT_EQ(run_cli({"characters"}), 0);
}

TEST(CliRun, JsonDocumentAndSeedReproducibility) {
  const std::string p1 = ::testing::TempDir() + "pairing1.json";
  const std::string p2 = ::testing::TempDir() + "pairing2.json";
  const std::string p3 = ::testing::TempDir() + "pairing3.json";
  ASSERT_EQ(run_cli({"pairing", "--seed", "5", "--cases", "5", "--out", p1}), 0);
  ASSERT_EQ(run_cli({"pairing", "--seed", "5", "--cases", "5", "--out", p2}), 0);
  ASSERT_EQ(run_cli({"pairing", "--seed", "6", "--cases", "5", "--out", p3}), 0);
  const Json d1 = read_json(p1), d2 = read_json(p2), d3 = read_json(p3);
  EXPECT_EQ(d1["content_hash"], d2["content_hash"]);
  EXPECT_NE(d1["content_hash"], d3["content_hash"]);
  EXPECT_EQ(d1["content_hash"].get<std::string>(), cli::content_hash(d1));
  EXPECT_EQ(d1["meta"]["subcommand"], "pairing");
  EXPECT_EQ(d1["meta"]["seed"], 5);
  EXPECT_EQ(d1["meta"]["version"], kToolkitVersion);
  EXPECT_TRUE(d1["verdict"]["pass"].get<bool>());
  ASSERT_FALSE(d1["records"].empty());
  for (const auto& r : d1["records"]) {
    EXPECT_EQ(r["subcommand"], "pairing");
    EXPECT_TRUE(r.contains("pass"));
    EXPECT_TRUE(r.contains("elapsed_ms"));
  }
}

TEST(CliRun, CsvOutput) {
  const std::string path = ::testing::TempDir() + "growth.csv";
  ASSERT_EQ(run_cli({"growth", "--dual", "su2", "--kmax", "5", "--format", "csv", "--out", path}), 0);
  std::ifstream is(path);
  std::string header;
  std::getline(is, header);
  EXPECT_NE(header.find("version"), std::string::npos);
  EXPECT_EQ(header.find("config"), std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(is, line);) rows += !line.empty();
  EXPECT_GE(rows, 1);
}
