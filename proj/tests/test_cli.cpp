#include "doctest.h"

#include "fanoquot/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fanoquot;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content) {
  auto p = std::filesystem::temp_directory_path() / ("fanoquot_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

} // namespace

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"table"}).code == kExitUsage);
  CHECK(run({"table", "--group", "L2_11", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"table", "--group", "L2_11", "--mode", "targeted", "--no-cache"}).code == kExitUsage);
  CHECK(run({"table", "--group", "L2_11", "--subgroup", "h1", "--no-cache"}).code == kExitUsage);
  CHECK(run({"table", "--group", "L2_11", "--mode", "targeted", "--subgroup", "zz", "--no-cache"}).code == kExitUsage);
  Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("check-deformation") != std::string::npos);
}

TEST_CASE("data and budget errors") {
  CHECK(run({"table", "--group", "nope", "--no-cache"}).code == kExitData);
  Run r = run({"table", "--group", "G1944", "--no-cache"});
  CHECK(r.code == kExitBudget);
  CHECK(r.err.find("budget") != std::string::npos);
  CHECK(run({"check-deformation", "--fixtures", "/nonexistent/fixtures"}).code == kExitData);
  CHECK(run({"check-deformation", "--fixtures", temp_file("bad", "1 2\n")}).code == kExitData);
}

TEST_CASE("table output formats") {
  Run t = run({"table", "--group", "L2_11", "--no-cache"});
  REQUIRE(t.code == kExitOk);
  CHECK(t.out.rfind("# L2_11 order 660 mode full-sweep\nclass  group", 0) == 0);

  Run c = run({"table", "--group", "L2_11", "--no-cache", "--format", "csv"});
  REQUIRE(c.code == kExitOk);
  CHECK(c.out.rfind("class,group,rank,n2,N3,n3,n31,n32,b2,pi1\n", 0) == 0);
  CHECK(c.out.find("\"(660,13)\",20,1,0,0,0,0,4,\"(1,1)\"") != std::string::npos);

  Run j = run({"table", "--group", "L2_11", "--no-cache", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  json doc = json::parse(j.out);
  CHECK(doc["ambient"] == "L2_11");
  CHECK(doc["ambient_order"] == 660);
  auto last = doc["rows"].back();
  CHECK(last["group"]["order"] == 660);
  CHECK(last["group"]["id"] == 13);
  CHECK(last["b2"] == json::array({4}));
  std::vector<std::string> keys;
  for (auto it = last.begin(); it != last.end(); ++it) keys.push_back(it.key());
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 10) ==
        std::vector<std::string>{"class", "group", "rank", "n2", "N3", "n3", "n31", "n32", "b2", "pi1"});
  CHECK(run({"table", "--group", "L2_11", "--no-cache", "--format", "structured"}).out == j.out);
}

TEST_CASE("identical runs give identical reports with and without the cache") {
  auto dir = (std::filesystem::temp_directory_path() / "fanoquot_cli_cache").string();
  std::filesystem::remove_all(dir);
  std::vector<std::string> base{"table", "--group", "A35", "--all-subgroups", "--format", "csv"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  Run cold = with({"--cache-dir", dir, "--threads", "1"});
  Run warm = with({"--cache-dir", dir, "--threads", "3"});
  Run none = with({"--no-cache", "--threads", "2"});
  CHECK(cold.code == kExitOk);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == none.out);
}

TEST_CASE("detect-l3 and fingerprint") {
  Run l3 = run({"detect-l3", "--group", "G1944", "--no-cache", "--format", "json"});
  REQUIRE(l3.code == kExitOk);
  CHECK(json::parse(l3.out)["count"] == 1);
  Run fp = run({"fingerprint", "--group", "L2_11", "--no-cache"});
  REQUIRE(fp.code == kExitOk);
  CHECK(fp.out.rfind("(660,13)  o660;", 0) == 0);
  Run sub = run({"fingerprint", "--group", "L2_11", "--no-cache", "--subgroup", "h1", "--subgroup", "h1*h2"});
  CHECK(sub.out.find("(2,1)") != std::string::npos);
  CHECK(sub.out.find("(11,1)") != std::string::npos);
}

TEST_CASE("check-deformation") {
  Run empty = run({"check-deformation", "--fixtures", temp_file("empty", "# nothing\n"), "--format", "json"});
  REQUIRE(empty.code == kExitOk);
  json e = json::parse(empty.out);
  CHECK(e["rows"].empty());
  CHECK(e["new_candidates"].empty());

  Run one = run({"check-deformation", "--fixtures", temp_file("one", "360 118 5 720\n"), "--format", "json"});
  json o = json::parse(one.out);
  CHECK(o["rows"][0]["k3"]["matched_order"] == 360);
  CHECK(o["rows"][0]["verdict"] == "numerically unobstructed");

  Run shipped = run({"check-deformation"});
  REQUIRE(shipped.code == kExitOk);
  auto tail = shipped.out.substr(shipped.out.find("# new candidates"));
  CHECK(tail == "# new candidates (2)\n(660,13) b2=4 ambient=660\n(2520,0) b2=4 ambient=2520\n");
}

TEST_CASE("validate-catalog") {
  Run ok = run({"validate-catalog", "--group", "L2_11", "--no-cache"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("relation h1*h2 has order 11") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);
}
