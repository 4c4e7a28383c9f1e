#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cycdeg/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cycdeg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("degset text and json") {
  auto r = run_cli({"degset", "--field", "q", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1 2 3 4 5 6\n");

  r = run_cli({"degset", "--field", "q", "--n", "6", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":6,\"degrees\":[0,1,2,3,4,5,6]}\n");

  r = run_cli({"degset", "--field", "fp:2", "--n", "7", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":7,\"degrees\":[0,1,3,4,6,7]}\n");

  r = run_cli({"degset", "--field", "q", "--n", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "degree\n0\n1\n4\n5\n");
}

TEST_CASE("degset switches to hex past 512") {
  auto r = run_cli({"degset", "--field", "q", "--n", "520", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("bits"));
  CHECK(!j.contains("degrees"));
  const std::string hex = j["bits"];
  CHECK(hex.size() == (520 + 1 + 3) / 4);

  r = run_cli({"degset", "--field", "q", "--n", "520"});
  CHECK(r.code == 0);
  CHECK(r.out == hex + "\n");

  // degree 0 is always attained, so the final hex digit is odd
  const char last = hex.back();
  CHECK((last == '1' || last == '3' || last == '5' || last == '7' || last == '9' ||
         last == 'b' || last == 'd' || last == 'f'));
}

TEST_CASE("practical command") {
  auto r = run_cli({"practical", "--field", "q", "--limit", "100"});
  CHECK(r.code == 0);
  CHECK(r.out == "28\n");

  r = run_cli({"practical", "--field", "q", "--limit", "10", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n2\n3\n4\n6\n8\n");

  r = run_cli({"practical", "--field", "q", "--limit", "100", "--format", "csv"});
  CHECK(r.out == "limit,count\n100,28\n");

  r = run_cli({"practical", "--field", "q", "--limit", "10", "--list", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 6);
  CHECK(j["values"] == std::vector<int>{1, 2, 3, 4, 6, 8});
}

TEST_CASE("survey csv is the default format") {
  const auto r = run_cli({"survey", "--field", "q", "--checkpoints", "10,100"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 14) == "x,count,ratio\n");
  CHECK(r.out == "x,count,ratio\n10,6,1.381551\n100,28,1.289448\n");
}

TEST_CASE("survey json parses and matches csv counts") {
  const auto r = run_cli({"survey", "--field", "fp:3", "--checkpoints", "50,200",
                          "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["x"] == 50);
  CHECK(j[1]["x"] == 200);
  CHECK(j[0]["count"].get<int>() <= j[1]["count"].get<int>());
}

TEST_CASE("hits and hcount") {
  auto r = run_cli({"hits", "--field", "q", "--x", "6", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  r = run_cli({"hits", "--field", "q", "--x", "100", "--m", "10", "--format", "csv"});
  CHECK(r.out.substr(0, 10) == "x,m,count\n");

  r = run_cli({"hcount", "--x", "100", "--y", "9", "--z", "11"});
  CHECK(r.code == 0);
  CHECK(r.out == "19\n");

  r = run_cli({"hcount", "--x", "100", "--y", "9", "--z", "11", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 19);
}

TEST_CASE("optimal command") {
  auto r = run_cli({"optimal", "--limit", "100000"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 3 15 255 65535\n");

  r = run_cli({"optimal", "--limit", "2"});
  CHECK(r.out == "1\n");

  r = run_cli({"optimal", "--limit", "100", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["values"] == std::vector<int>{1, 3, 15});
}

TEST_CASE("efficient command") {
  const auto r = run_cli({"efficient", "--limit", "3", "--checkpoints", "1,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "x,count,density\n1,1,1.000000\n3,2,0.666667\n");
}

TEST_CASE("verify command exit codes") {
  auto r = run_cli({"verify", "--suite", "fermat-identity", "--limit", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "PASS fermat-identity\n");

  r = run_cli({"verify", "--suite", "no-such", "--limit", "5"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(!r.err.empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"degset"}).code == 2);                             // missing required
  CHECK(run_cli({"degset", "--field", "q"}).code == 2);             // missing --n
  CHECK(run_cli({"degset", "--field", "q", "--n", "6", "--format", "yaml"}).code == 2);
  CHECK(run_cli({"degset", "--field", "q", "--n", "six"}).code == 2);
  CHECK(run_cli({"survey", "--field", "q", "--checkpoints", "10,,20"}).code == 2);
  CHECK(run_cli({"survey", "--field", "q", "--checkpoints", "1;5"}).code == 2);
  CHECK(run_cli({"degset", "--field", "q", "--n", "6", "--bogus"}).code == 2);
}

TEST_CASE("domain errors exit 1") {
  CHECK(run_cli({"degset", "--field", "q", "--n", "200000000"}).code == 1);
  CHECK(run_cli({"optimal", "--limit", "2199023255552"}).code == 1);  // > 2^40
  CHECK(run_cli({"degset", "--field", "fp:4", "--n", "6"}).code == 1);
  CHECK(run_cli({"degset", "--field", "quad:3", "--n", "6"}).code == 1);
  CHECK(run_cli({"degset", "--field", "what", "--n", "6"}).code == 1);
  CHECK(run_cli({"hcount", "--x", "100", "--y", "10", "--z", "10"}).code == 1);
  CHECK(run_cli({"survey", "--field", "q", "--checkpoints", "50,20"}).code == 1);
  CHECK(run_cli({"hits", "--field", "q", "--x", "10", "--m", "20"}).code == 1);
  CHECK(run_cli({"degset", "--field", "q", "--n", "0"}).code == 1);
}

TEST_CASE("help exits zero") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(!r.out.empty());
}

TEST_CASE("csv outputs keep a constant column count") {
  const std::vector<std::vector<std::string>> commands = {
      {"degset", "--field", "q", "--n", "30", "--format", "csv"},
      {"practical", "--field", "q", "--limit", "50", "--format", "csv"},
      {"practical", "--field", "q", "--limit", "50", "--list", "--format", "csv"},
      {"survey", "--field", "q", "--checkpoints", "10,20,30"},
      {"hits", "--field", "q", "--x", "50", "--m", "5", "--format", "csv"},
      {"hcount", "--x", "50", "--y", "2", "--z", "7", "--format", "csv"},
      {"optimal", "--limit", "50", "--format", "csv"},
      {"efficient", "--limit", "50", "--checkpoints", "10,50"},
  };
  for (const auto& cmd : commands) {
    const auto r = run_cli(cmd);
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t columns = 0;
    while (std::getline(lines, line)) {
      const std::size_t commas =
          static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
      if (columns == 0)
        columns = commas + 1;
      else
        CHECK(columns == commas + 1);
    }
    CHECK(columns >= 1);
  }
}

TEST_CASE("output is byte-identical across thread counts") {
  const std::vector<std::vector<std::string>> commands = {
      {"survey", "--field", "q", "--checkpoints", "100,1000,9000"},
      {"survey", "--field", "fp:2", "--checkpoints", "500,5000"},
      {"practical", "--field", "quad:5", "--limit", "3000", "--list"},
      {"hits", "--field", "fp:2", "--x", "9000", "--m", "10"},
      {"hcount", "--x", "9000", "--y", "10", "--z", "100"},
      {"efficient", "--limit", "2500", "--checkpoints", "1000,2500"},
  };
  for (const auto& cmd : commands) {
    auto base = cmd;
    base.push_back("--threads");
    base.push_back("1");
    auto wide = cmd;
    wide.push_back("--threads");
    wide.push_back("8");
    const auto a = run_cli(base);
    const auto b = run_cli(wide);
    CHECK(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

}  // TEST_SUITE
