#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rooms/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int rc;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

CliResult run(std::vector<std::string> args) {
  std::vector<const char*> argv{"rooms"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int rc = rooms::run_cli(static_cast<int>(argv.size()), argv.data(), out,
                          err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze reports the decomposition") {
  CliResult r = run({"analyze", "-n", "4", "-m", "3"});
  REQUIRE(r.rc == 0);
  json j = r.body();
  CHECK(j["vertices"] == 81);
  CHECK(j["measured"]["giant_size"] == 72);
  CHECK(j["measured"]["singleton_sccs"] == 9);
  CHECK(j["measured"]["zero_in_degree"] == 9);
  CHECK(j["verdicts"]["all"] == true);
  CHECK(r.out.back() == '\n');
}

TEST_CASE("analyze writes graph exports") {
  const std::string dot = "cli_test_out.dot";
  const std::string jsonl = "cli_test_out.jsonl";
  CliResult r = run({"analyze", "-n", "2", "-m", "2", "--dot", dot,
                     "--jsonl", jsonl});
  REQUIRE(r.rc == 0);
  std::ifstream din(dot);
  std::string first;
  REQUIRE(std::getline(din, first));
  CHECK(first.find("digraph") != std::string::npos);
  std::ifstream jin(jsonl);
  std::string line;
  int lines = 0;
  while (std::getline(jin, line)) {
    json v = json::parse(line);
    CHECK(v.contains("id"));
    CHECK(v.contains("scc"));
    lines++;
  }
  CHECK(lines == 4);
  std::remove(dot.c_str());
  std::remove(jsonl.c_str());
}

TEST_CASE("path subcommand exit codes") {
  CliResult ok = run({"path", "-n", "5", "-m", "3", "--from", "1,1,1,1,1",
                      "--to", "3,2,1,2,3", "--compare-bfs"});
  REQUIRE(ok.rc == 0);
  json j = ok.body();
  CHECK(j["reachable"] == true);
  CHECK(j["valid"] == true);
  CHECK(j["bfs"]["matches_reachability"] == true);
  CHECK(j["path"].size() == j["length"].get<std::size_t>() + 1);

  CliResult conc = run({"path", "-n", "4", "-m", "3", "--from", "1,2,3,1",
                        "--to", "2,2,2,2"});
  CHECK(conc.rc == 3);
  CHECK(conc.body()["reason"] == "target-concentrated");

  CliResult orbit = run({"path", "-n", "3", "-m", "2", "--from", "1,1,1",
                         "--to", "2,2,2"});
  CHECK(orbit.rc == 3);
  CHECK(orbit.body()["reason"] == "orbit-miss");

  CliResult bad = run({"path", "-n", "3", "-m", "3", "--from", "1,2",
                       "--to", "1,2,3"});
  CHECK(bad.rc == 2);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("walk output is byte-stable under one seed") {
  std::vector<std::string> args{"walk", "-n",     "3",    "-m",   "3",
                                "--start", "1,2,3", "--steps", "5000",
                                "--seed",  "17"};
  CliResult a = run(args);
  CliResult b = run(args);
  REQUIRE(a.rc == 0);
  CHECK(a.out == b.out);
  json j = a.body();
  CHECK(j["total_visits"] == 5001);

  args[args.size() - 1] = "18";
  CliResult c = run(args);
  CHECK(a.out != c.out);

  CliResult occ = run({"walk", "-n", "4", "-m", "3", "--start", "1,1,2,3",
                       "--steps", "200", "--occupancy"});
  REQUIRE(occ.rc == 0);
  CHECK(occ.body().contains("occupancy"));
}

TEST_CASE("derange subcommand") {
  CliResult two = run({"derange", "--perm", "2,1,4,3"});
  REQUIRE(two.rc == 0);
  json j = two.body();
  CHECK(j["factorable"] == true);
  CHECK(j["count"] == 1);  // already a derangement
  CHECK(j["verified"] == true);

  CliResult swap = run({"derange", "--perm", "2,1,3,4"});
  REQUIRE(swap.rc == 0);
  CHECK(swap.body()["count"] == 2);

  CliResult odd3 = run({"derange", "--perm", "2,1,3"});
  CHECK(odd3.rc == 3);
  CHECK(odd3.body()["factorable"] == false);

  CliResult bad = run({"derange", "--perm", "2,2"});
  CHECK(bad.rc == 2);
}

TEST_CASE("oracle passes on a small grid") {
  CliResult r = run({"oracle", "--grid", "2..3x2..3", "--pairs", "30",
                     "--seed", "5"});
  REQUIRE(r.rc == 0);
  json j = r.body();
  CHECK(j["ok"] == true);
  CHECK(j["failures"] == 0);
  CHECK(j["instances"].size() == 4);
  CHECK(j["checked"].get<std::uint64_t>() > 0);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run({}).rc == 2);
  CHECK(run({"analyze"}).rc == 2);                      // missing -n/-m
  CHECK(run({"analyze", "-n", "4"}).rc == 2);           // missing -m
  CHECK(run({"frobnicate"}).rc == 2);                   // unknown command
  CHECK(run({"analyze", "-n", "0", "-m", "3"}).rc == 2);
  CHECK(run({"analyze", "-n", "30", "-m", "10"}).rc == 2);  // over bound
  CHECK(run({"oracle", "--grid", "3x"}).rc == 2);
  CliResult help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}
