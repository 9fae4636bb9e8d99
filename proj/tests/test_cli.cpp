#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "helpers.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (stdin_data.empty()) {
    cmd = std::string(SURFALG_CLI) + " " + args + " 2>/dev/null";
  } else {
    std::string tmp = "/tmp/surfalg_cli_stdin.json";
    std::FILE* f = std::fopen(tmp.c_str(), "w");
    REQUIRE(f);
    std::fwrite(stdin_data.data(), 1, stdin_data.size(), f);
    std::fclose(f);
    cmd = std::string(SURFALG_CLI) + " " + args + " < " + tmp + " 2>/dev/null";
  }
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string fx(const char* name) { return testutil::fixture_path(name); }

}  // namespace

TEST_CASE("validate: exit 0 and canonical echo on good input, exit 1 with diagnostics on bad") {
  RunResult ok = run("validate " + fx("ex35.json"));
  CHECK(ok.status == 0);
  CHECK(json::parse(ok.out)["vertices"] == json({"1", "2", "3"}));

  std::FILE* f = std::fopen("/tmp/surfalg_garbage.json", "w");
  std::fputs("{\"format_version\": \"1\"}", f);
  std::fclose(f);
  RunResult bad = run("validate /tmp/surfalg_garbage.json");
  CHECK(bad.status == 1);
  CHECK(json::parse(bad.out)["valid"] == false);

  RunResult notjson = run("validate " + std::string("/dev/null"));
  CHECK(notjson.status == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("no-such-command").status == 2);
  CHECK(run("orbits --perm h " + fx("ex35.json")).status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("star pipes into orbits") {
  RunResult r = run("star " + fx("ex44.json") + " --format json", "");
  REQUIRE(r.status == 0);
  RunResult orbits = run("orbits --perm g", r.out);
  REQUIRE(orbits.status == 0);
  json j = json::parse(orbits.out);
  json expected = json::array();
  expected.push_back(json::array({"alpha'", "alpha''"}));
  expected.push_back(json::array({"beta'", "beta''"}));
  expected.push_back(json::array({"eps_alpha", "eps_beta"}));
  CHECK(j["orbits"] == expected);
}

TEST_CASE("dim of the Markov quiver with weight 1 is 36") {
  RunResult r = run("dim " + fx("ex35.json") + " --format text");
  CHECK(r.status == 0);
  CHECK(r.out == "36\n");
  RunResult j = run("dim " + fx("ex35.json"));
  CHECK(json::parse(j.out)["dimension"] == 36);
}

TEST_CASE("deterministic output: same input twice gives identical bytes") {
  for (const std::string& cmd : std::vector<std::string>{
           "star " + fx("ex28.json"), "export-dot " + fx("ex35.json"),
           "relations " + fx("ex33.json"), "to-brauer " + fx("ex35.json"),
           "random --vertices 5 --seed 11 --max-weight 3"}) {
    RunResult a = run(cmd), b = run(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("reduce --keep") {
  RunResult star_out = run("star " + fx("ex33.json"));
  REQUIRE(star_out.status == 0);
  RunResult reduced = run("reduce --keep 1,2,3,4", star_out.out);
  REQUIRE(reduced.status == 0);
  json j = json::parse(reduced.out);
  REQUIRE(j["components"].size() == 1);
  CHECK(j["components"][0]["vertices"] == json({"1", "2", "3", "4"}));
}

TEST_CASE("iso reports a witness or false") {
  RunResult same = run("iso " + fx("ex35.json") + " " + fx("ex35.json"));
  CHECK(same.status == 0);
  CHECK(json::parse(same.out)["isomorphic"] == true);
  RunResult diff = run("iso " + fx("ex35.json") + " " + fx("ex33.json"));
  CHECK(diff.status == 0);
  CHECK(json::parse(diff.out)["isomorphic"] == false);
}

TEST_CASE("green-walks accepts both document kinds") {
  RunResult from_quiver = run("green-walks " + fx("ex410.json"));
  RunResult from_graph = run("green-walks " + fx("ex410_brauer.json"));
  CHECK(from_quiver.status == 0);
  CHECK(from_graph.status == 0);
  CHECK(json::parse(from_quiver.out)["walks"].size() == 3);
  CHECK(json::parse(from_graph.out)["walks"].size() == 3);
}

TEST_CASE("from-brauer, to-brauer, barycentric and surface") {
  RunResult q = run("from-brauer " + fx("ex28_brauer.json"));
  REQUIRE(q.status == 0);
  CHECK(json::parse(q.out)["vertices"].size() == 8);

  RunResult g = run("to-brauer " + fx("ex35.json"));
  REQUIRE(g.status == 0);
  CHECK(json::parse(g.out)["edges"].size() == 3);

  RunResult b = run("barycentric " + fx("ex410_brauer.json"));
  REQUIRE(b.status == 0);
  CHECK(json::parse(b.out)["vertices"].size() == 6);

  RunResult s = run("surface " + fx("ex35.json"));
  REQUIRE(s.status == 0);
  json sj = json::parse(s.out);
  CHECK(sj["euler_characteristic"] == 0);
  CHECK(sj["genus"] == 1);

  RunResult too_small = run("surface " + fx("ex45.json"));
  CHECK(too_small.status == 1);
}

TEST_CASE("relations kinds and failure modes") {
  RunResult biserial = run("relations --kind biserial " + fx("ex35.json"));
  CHECK(biserial.status == 0);
  CHECK(json::parse(biserial.out)["relations"].size() == 9);

  RunResult border = run("relations --kind border " + fx("sec5.json"));
  CHECK(border.status == 0);

  RunResult weighted = run("relations --kind weighted " + fx("punctured.json"));
  CHECK(weighted.status == 0);
  CHECK(json::parse(weighted.out)["relations"].size() == 24);

  CHECK(run("relations --kind border " + fx("ex35.json")).status == 1);
  CHECK(run("relations --kind weighted " + fx("ex28.json")).status == 1);
}

TEST_CASE("envelope records the kept vertices in metadata") {
  RunResult r = run("envelope " + fx("ex44.json"));
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["metadata"]["keep"] == json({"1"}));
  CHECK(j.contains("params"));
}

TEST_CASE("random is deterministic per seed and validates") {
  RunResult a = run("random --vertices 4 --seed 9");
  RunResult b = run("random --vertices 4 --seed 10");
  CHECK(a.status == 0);
  CHECK(b.status == 0);
  CHECK(a.out != b.out);
  RunResult check = run("validate", a.out);
  CHECK(check.status == 0);
}

TEST_CASE("cartan and gabriel") {
  RunResult c = run("cartan " + fx("ex35.json"));
  REQUIRE(c.status == 0);
  json cj = json::parse(c.out);
  long long total = 0;
  for (const auto& row : cj["matrix"])
    for (const auto& entry : row) total += entry.get<long long>();
  CHECK(total == 36);

  RunResult g = run("gabriel " + fx("ex35.json"));
  REQUIRE(g.status == 0);
  CHECK(json::parse(g.out)["arrows"].size() == 6);
}

TEST_CASE("export-dot on both document kinds") {
  RunResult q = run("export-dot " + fx("ex35.json"));
  CHECK(q.status == 0);
  CHECK(q.out.rfind("digraph", 0) == 0);
  RunResult b = run("export-dot " + fx("ex410_brauer.json"));
  CHECK(b.status == 0);
  CHECK(b.out.rfind("graph", 0) == 0);
}

TEST_CASE("star --minimal leaves triangles and fixed loops alone") {
  RunResult r = run("star --minimal " + fx("ex33.json"));
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  // the two triangle orbits and both f-fixed loops survive verbatim;
  // nothing needed processing, so the quiver is unchanged
  CHECK(j["vertices"].size() == 4);
  CHECK(j["arrows"].size() == 8);

  RunResult full = run("star " + fx("ex33.json"));
  CHECK(json::parse(full.out)["vertices"].size() == 12);
}
