#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxcomb/cli.hpp"
#include "json.hpp"

using coxcomb::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"info", "E", "6"}).code == 2);
  CHECK(run({"info", "D", "3"}).code == 2);
  CHECK(run({"info", "A", "0"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"comb", "A", "2", "--from", "0,0"}).code == 2);
  CHECK(run({"comb", "A", "2", "--from", "0,0,0", "--to", "1,1"}).code == 2);
  CHECK(run({"verify", "nosuch", "A", "2"}).code == 2);
  CHECK(run({"verify", "ftp", "A", "2", "--format", "yaml"}).code == 2);
  CHECK(run({"verify", "lemma62", "A", "2", "--format", "csv"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("info") {
  const auto a2 = run({"info", "A", "2"});
  CHECK(a2.code == 0);
  CHECK(has(a2.out, "marks         1 1"));
  CHECK(has(a2.out, "|W|           6"));
  CHECK(has(a2.out, "degree        6"));
  const auto b2 = run({"info", "B", "2"});
  CHECK(has(b2.out, "marks         1 2"));
  CHECK(has(b2.out, "degree        8"));
  CHECK(has(b2.out, "(ε_1+ε_2)/2"));

  const auto j = nlohmann::json::parse(run({"info", "A", "1", "--format", "json"}).out);
  CHECK(j.at("kind") == "A");
  CHECK(j.at("rank") == 1);
  CHECK(j.at("result").at("weyl_order") == 2);
}

TEST_CASE("comb") {
  const auto r = run({"comb", "A", "2", "--from", "0,0", "--to", "1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& steps = j.at("result").at("steps");
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].at("type") == 1);
  CHECK(steps[1].at("type") == 2);

  const auto b = nlohmann::json::parse(run({"comb", "B", "2", "--from", "0,0", "--to", "2,0", "--format", "json"}).out);
  CHECK(b.at("result").at("steps").size() == 2);
  const auto e = nlohmann::json::parse(run({"comb", "C", "3", "--from", "1,2,3", "--to", "1,2,3", "--format", "json"}).out);
  CHECK(e.at("result").at("steps").empty());

  const auto bad = run({"comb", "B", "2", "--from", "0,0", "--to", "1/2,0"});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "not a special vertex"));
  CHECK(run({"comb", "A", "2", "--from=-1,2", "--to", "0,0"}).code == 0);
}

TEST_CASE("verify lemma62") {
  const auto d4 = run({"verify", "lemma62", "D", "4"});
  CHECK(d4.code == 0);
  CHECK(has(d4.out, "fails (expected)"));
  const auto b3 = run({"verify", "lemma62", "B", "3"});
  CHECK(b3.code == 0);
  CHECK(has(b3.out, "holds"));

  const auto j = nlohmann::json::parse(run({"verify", "lemma62", "D", "4", "--format", "json"}).out);
  for (const char* key : {"suite", "kind", "rank", "params", "result", "witnesses"}) CHECK(j.contains(key));
  CHECK(j.at("suite") == "lemma62");
  REQUIRE(j.at("witnesses").size() == 2);
  CHECK(j.at("witnesses")[0].at("omega_eps") == "(-ε_1+ε_2+ε_3-ε_4)/2");
}

TEST_CASE("verify local-global") {
  const auto b2 = run({"verify", "local-global", "B", "2", "--radius", "4"});
  CHECK(b2.code == 0);
  CHECK(has(b2.out, "holds"));
  const auto d4 = run({"verify", "local-global", "D", "4", "--radius", "2"});
  CHECK(d4.code == 0);
  CHECK(has(d4.out, "fails (expected)"));
  CHECK(run({"verify", "local-global", "A", "2", "--radius", "4", "--length", "2"}).code == 3);
}

TEST_CASE("verify ftp formats") {
  const auto t = run({"verify", "ftp", "A", "2", "--radius", "3"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "stabilized"));
  const auto csv = run({"verify", "ftp", "A", "2", "--radius", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "kind,rank,radius,pairs,k,k_same_start");
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
  const auto j = nlohmann::json::parse(run({"verify", "ftp", "A", "2", "--radius", "3", "--format", "json"}).out);
  CHECK(j.at("result").at("max_separation") == 2);
  CHECK(j.at("params").at("radius") == 3);
}

TEST_CASE("verify quasi and uniqueness") {
  CHECK(run({"verify", "quasi", "A", "2", "--radius", "3"}).code == 0);
  CHECK(run({"verify", "uniqueness", "B", "2", "--radius", "3"}).code == 0);
}

TEST_CASE("output is deterministic across runs and job counts") {
  const auto a = run({"verify", "ftp", "B", "2", "--radius", "3", "--format", "json", "--jobs", "1"});
  const auto b = run({"verify", "ftp", "B", "2", "--radius", "3", "--format", "json", "--jobs", "1"});
  CHECK(a.out == b.out);
  auto ja = nlohmann::json::parse(a.out);
  auto jc = nlohmann::json::parse(run({"verify", "ftp", "B", "2", "--radius", "3", "--format", "json", "--jobs", "3"}).out);
  CHECK(ja.at("result") == jc.at("result"));
}

TEST_CASE("fsa export") {
  const auto dot = run({"fsa", "A", "2"});
  CHECK(dot.code == 0);
  CHECK(has(dot.out, "states 6"));
  CHECK(has(dot.out, "digraph \"A2\" {"));
  CHECK(has(dot.out, "s0 -> s0;"));
  const auto j = nlohmann::json::parse(run({"fsa", "B", "2", "--format", "json"}).out);
  CHECK(j.at("result").at("states").size() == 8);
}

TEST_CASE("plot") {
  CHECK(run({"plot", "A", "3"}).code == 2);
  const auto svg = run({"plot", "A", "2", "--radius", "2", "--path", "0,0:2,1", "--corridor", "1"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(has(svg.out, "<line"));
  CHECK(has(svg.out, "<polyline"));
  CHECK(has(svg.out, "</svg>"));
  CHECK(run({"plot", "B", "2", "--path", "0,0"}).code == 2);
}

TEST_CASE("--out writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "coxcomb_cli_test.json";
  std::filesystem::remove(path);
  const auto r = run({"verify", "lemma62", "C", "3", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("result").at("status") == "holds");
  std::filesystem::remove(path);
}
