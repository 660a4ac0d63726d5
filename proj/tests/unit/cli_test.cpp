#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "powcom/cli.hpp"
#include "powcom/records.hpp"

namespace powcom::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, CheckS3) {
  const auto r = invoke({"check", "--group", "S3", "--m", "2", "--n", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("P: false (witness: cubes"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("abelian: false; decomposition: vacuous"), std::string::npos) << r.out;
}

TEST(Cli, CheckCyclic) {
  const auto r = invoke({"check", "--group", "C4xC3", "--m", "2", "--n", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("P: true; abelian: true; decomposition: holds"), std::string::npos) << r.out;
}

TEST(Cli, CheckNotCoprimeIsUsageError) {
  const auto r = invoke({"check", "--group", "S3", "--m", "2", "--n", "4"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("NotCoprime"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  const auto forced = invoke({"check", "--group", "S3", "--m", "2", "--n", "4", "--allow-non-coprime"});
  EXPECT_EQ(forced.code, kOk);
}

TEST(Cli, CheckRecordsAreValid) {
  const auto r = invoke({"check", "--group", "Q8", "--m", "3", "--n", "4", "--format", "records"});
  EXPECT_EQ(r.code, kOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1U);
  const auto j = nlohmann::json::parse(rows[0]);
  EXPECT_TRUE(is_valid_property_record(j));
  EXPECT_EQ(j["group"], "Q8");
  EXPECT_FALSE(j.contains("wall_seconds"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"check", "--group", "S3"}).code, kUsage);
  EXPECT_EQ(invoke({"check", "--group", "S3", "--m", "x", "--n", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"check", "--group", "Q7", "--m", "2", "--n", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"check", "--group", "S3", "--m", "2", "--n", "3", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"scan", "--max-order", "6", "--catalog", "--enumerate"}).code, kUsage);
  EXPECT_EQ(invoke({"scan", "--max-order", "6", "--pairs", "2;3"}).code, kUsage);
  EXPECT_EQ(invoke({"scan", "--max-order", "6", "--pairs", "2,4"}).code, kUsage);
  EXPECT_EQ(invoke({"law", "--group", "S3", "--law", "[x,y"}).code, kUsage);
  EXPECT_EQ(invoke({"sylow", "--group", "S3", "--p", "5"}).code, kUsage);
  EXPECT_EQ(invoke({"decompose", "--group", "S3", "--element", "6"}).code, kUsage);
  EXPECT_EQ(invoke({"lattice", "--group", "S5"}).code, kUsage);
  EXPECT_EQ(invoke({"enumerate", "--order", "13"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, ScanEnumerated) {
  const auto r = invoke({"scan", "--max-order", "10", "--pairs", "2,3", "--enumerate"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("counterexamples: 0"), std::string::npos);
  EXPECT_NE(r.out.find("rows: 18;"), std::string::npos) << r.out;
}

TEST(Cli, ScanRecordsAndJsonFile) {
  const auto path = std::filesystem::temp_directory_path() / "powcom_cli_scan.json";
  const auto r = invoke({"scan", "--max-order", "12", "--pairs", "2,3;3,4", "--format", "records",
                         "--json", path.string()});
  EXPECT_EQ(r.code, kOk);
  const auto rows = lines(r.out);
  ASSERT_FALSE(rows.empty());
  for (const auto& line : rows) EXPECT_TRUE(is_valid_property_record(nlohmann::json::parse(line))) << line;

  std::ifstream file(path);
  const auto doc = nlohmann::json::parse(file);
  ASSERT_TRUE(doc.contains("rows"));
  EXPECT_EQ(doc["rows"].size(), rows.size());
  for (const auto& row : doc["rows"]) EXPECT_TRUE(is_valid_property_record(row));
  EXPECT_TRUE(doc["counterexamples"].empty());
  std::filesystem::remove(path);
}

TEST(Cli, ByteIdenticalAcrossWorkers) {
  const std::vector<std::string> base{"scan", "--max-order", "24", "--pairs", "2,3;3,4;2,5",
                                      "--format", "records"};
  auto with_jobs = [&](const char* jobs) {
    auto args = base;
    args.insert(args.end(), {"--jobs", jobs});
    return invoke(args);
  };
  const auto one = with_jobs("1");
  const auto four = with_jobs("4");
  EXPECT_EQ(one.code, kOk);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, with_jobs("1").out);
}

TEST(Cli, TimingIsOptIn) {
  const auto r = invoke({"check", "--group", "S3", "--m", "2", "--n", "3", "--format", "records",
                         "--timing"});
  const auto j = nlohmann::json::parse(lines(r.out).at(0));
  EXPECT_TRUE(j.contains("wall_seconds"));
  EXPECT_TRUE(is_valid_property_record(j));
}

TEST(Cli, Enumerate) {
  const auto dir = std::filesystem::temp_directory_path() / "powcom_cli_enum";
  std::filesystem::remove_all(dir);
  const auto r = invoke({"enumerate", "--order", "8", "--out", dir.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("order 8: 5 classes"), std::string::npos) << r.out;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    ++files;
    const auto check = invoke({"check", "--group", "@" + entry.path().string(), "--m", "2", "--n", "3"});
    EXPECT_EQ(check.code, kOk) << check.err;
  }
  EXPECT_EQ(files, 5U);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Sylow) {
  const auto r = invoke({"sylow", "--group", "S3", "--p", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("Sylow subgroups: 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("verdict: holds"), std::string::npos) << r.out;
}

TEST(Cli, Decompose) {
  const auto r = invoke({"decompose", "--group", "C12", "--element", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("order 12"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("check: ok"), std::string::npos) << r.out;
}

TEST(Cli, Law) {
  const auto fails = invoke({"law", "--group", "S3", "--law", "[x^3,y^3]=1"});
  EXPECT_EQ(fails.code, kOk);
  EXPECT_NE(fails.out.find("holds: false (witness: x="), std::string::npos) << fails.out;
  const auto ok = invoke({"law", "--group", "S3", "--law", "[x^2,y^2]=1"});
  EXPECT_NE(ok.out.find("holds: true"), std::string::npos) << ok.out;
}

TEST(Cli, Lattice) {
  const auto r = invoke({"lattice", "--group", "S3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("6 subgroups"), std::string::npos) << r.out;
}

TEST(Cli, EnvironmentOverridesCaps) {
  ::setenv("POWCOM_LATTICE_CAP", "4", 1);
  const auto r = invoke({"lattice", "--group", "S3"});
  ::unsetenv("POWCOM_LATTICE_CAP");
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("OrderCapExceeded"), std::string::npos) << r.err;
}

}  // namespace
}  // namespace powcom::cli
