#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentatail/cli.hpp"

using namespace pentatail;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pentatail");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pentatail_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("table2 matches the golden copy") {
    const Run r = run_cli({"table2"});
    CHECK(r.code == cli::kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j == cli::table2_golden());
    CHECK(cli::table2_diff(cli::table2_golden(), cli::table2_json()).empty());
  }

  TEST_CASE("table2 against a tampered golden file") {
    auto golden = cli::table2_golden();
    golden["rows"][0]["K"] = 4;
    const auto path = temp_file("golden.json");
    std::ofstream(path) << golden.dump();
    const Run r = run_cli({"table2", "--golden", path.string()});
    CHECK(r.code == cli::kExitMismatch);
    CHECK(r.err.find("K") != std::string::npos);
    std::ofstream(path) << "{not json";
    CHECK(run_cli({"table2", "--golden", path.string()}).code == cli::kExitUsage);
    std::filesystem::remove(path);
    CHECK(run_cli({"table2", "--golden", "/nonexistent/golden.json"}).code == cli::kExitUsage);
  }

  TEST_CASE("verify") {
    CHECK(run_cli({"verify", "--theorem", "mth1"}).code == cli::kExitPass);
    CHECK(run_cli({"verify", "--triple", "1,2,4"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--theorem", "mth1", "--triple", "1,2,3"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--theorem", "nope"}).code == cli::kExitUsage);
    const Run th2 = run_cli({"verify", "--theorem", "th2"});
    CHECK(th2.code == cli::kExitPass);
    CHECK(th2.out.find("\"-1\"") != std::string::npos);
    const auto j = nlohmann::json::parse(th2.out);
    bool found = false;
    for (const auto& r : j["reports"]) {
      for (const auto& v : r["negatives"]) found = found || v == nlohmann::json::parse(R"([1,7,"-1"])");
    }
    CHECK(found);
    const Run tri = run_cli({"verify", "--triple", "1,3,4", "--format", "csv"});
    CHECK(tri.code == cli::kExitPass);
    CHECK(tri.out.find(",zero,1,38,0") != std::string::npos);
  }

  TEST_CASE("identity") {
    for (const char* id : {"pnt", "am", "ag", "jtp", "cor25"}) {
      const Run r = run_cli({"identity", "--id", id});
      CAPTURE(id);
      CHECK(r.code == cli::kExitPass);
      CHECK(nlohmann::json::parse(r.out)["holds"] == true);
    }
    CHECK(run_cli({"identity", "--id", "jtp", "--i", "2", "--d", "5", "--order", "150"}).code == cli::kExitPass);
    CHECK(run_cli({"identity", "--id", "ag", "--d", "2", "--tau", "0", "--i", "2"}).code == cli::kExitPass);
    CHECK(run_cli({"identity", "--id", "bogus"}).code == cli::kExitUsage);
  }

  TEST_CASE("conjecture") {
    CHECK(run_cli({"conjecture", "--id", "trunc-jtp", "--R", "7", "--S", "2"}).code == cli::kExitPass);
    CHECK(run_cli({"conjecture", "--id", "trunc-jtp", "--mode", "head"}).code == cli::kExitPass);
    CHECK(run_cli({"conjecture", "--id", "bivariate-finite", "--kmax", "3", "--nmax", "20"}).code ==
          cli::kExitPass);
    const Run tail = run_cli({"conjecture", "--id", "bivariate-tail", "--kmax", "3", "--dmax", "4", "--nmax", "30"});
    CHECK(tail.code == cli::kExitCounterexample);
    CHECK_FALSE(nlohmann::json::parse(tail.out)["conjecture_findings"].empty());
    CHECK(run_cli({"conjecture", "--id", "bivariate-tail", "--kmax", "0"}).code == cli::kExitUsage);
    CHECK(run_cli({"conjecture", "--id", "trunc-jtp", "--R", "5", "--S", "3"}).code == cli::kExitUsage);
    CHECK(run_cli({"conjecture", "--id", "trunc-jtp", "--mode", "sideways"}).code == cli::kExitUsage);
  }

  TEST_CASE("oracle") {
    const Run mk = run_cli({"oracle", "--which", "mk", "--k", "1", "--n", "2", "--format", "text"});
    CHECK(mk.code == cli::kExitPass);
    CHECK(mk.out == "1\n");
    CHECK(run_cli({"oracle", "--which", "partitions", "--parts", "1,2,3", "--n", "6", "--format", "text"}).out ==
          "7\n");
    CHECK(run_cli({"oracle", "--which", "dregular", "--d", "2", "--n", "5", "--format", "text"}).out == "3\n");
    CHECK(run_cli({"oracle", "--which", "mk", "--k", "1", "--n", "60"}).code == cli::kExitUsage);
    CHECK(run_cli({"--max-enum", "10", "oracle", "--which", "dregular", "--d", "2", "--n", "12"}).code ==
          cli::kExitUsage);
  }

  TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"table2", "--bogus"}).code == cli::kExitUsage);
    CHECK(run_cli({"--format", "xml", "table2"}).code == cli::kExitUsage);
    CHECK(run_cli({"--help"}).code == cli::kExitPass);
  }

  TEST_CASE("worker count does not change output") {
    const Run a = run_cli({"--workers", "1", "verify", "--theorem", "mth2"});
    const Run b = run_cli({"--workers", "8", "verify", "--theorem", "mth2"});
    CHECK(a.code == cli::kExitPass);
    CHECK(a.out == b.out);
  }

  TEST_CASE("--out writes the report to a file") {
    const auto path = temp_file("report.json");
    const Run r = run_cli({"--out", path.string(), "verify", "--triple", "1,2,3"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    CHECK(j["zeros"] == nlohmann::json::parse("[[1,13]]"));
    std::filesystem::remove(path);
  }
}
