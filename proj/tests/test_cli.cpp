#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "wdrd/digraph_io.hpp"
#include "wdrd/families.hpp"
#include "wdrd/scheme.hpp"

using namespace wdrd;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(WDRD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("wdrd_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

const std::string kCatalog = std::string("--catalog ") + WDRD_CATALOG_DIR;
const std::string kData = std::string("--data ") + WDRD_DATA_DIR;

}  // namespace

TEST_CASE("construct and check: pass, round trip, determinism") {
  TempDir tmp;
  const std::string f = tmp.file("i.json");
  CHECK(run("construct --family i --out " + f).status == 0);

  // written document equals the in-memory serialization
  const Digraph built = build_family({FamilyTag::i, {}, {}});
  CHECK(read_text_file(f) == digraph_to_json(built));

  const RunResult check1 = run("check " + f);
  CHECK(check1.status == 0);
  CHECK(check1.output.find("\"wdrd\": true") != std::string::npos);
  CHECK(check1.output.find("\"commutative\": true") != std::string::npos);
  CHECK(check1.output.find("\"n\": 7") != std::string::npos);

  // reading the file back gives the same report as the in-memory digraph
  const Digraph reread = read_digraph_file(f);
  CHECK(reread.out == built.out);
  const auto profile = two_way_profile(reread);
  const auto partition = relation_partition(profile);
  const auto report = check_wdrd(reread, profile, partition);
  CHECK(report.is_wdrd);
  CHECK(report.is_commutative == true);

  // byte-stable across runs
  CHECK(run("check " + f).output == check1.output);
}

TEST_CASE("check flags a two-cycle as outside the hypothesis class") {
  TempDir tmp;
  const std::string f = tmp.file("digon.json");
  write_text_file(f, "{\"n\": 2, \"arcs\": [[0,1],[1,0]]}\n");
  const RunResult r = run("check " + f);
  CHECK(r.status == 0);  // it is a WDRD, just not in the hypothesis class
  CHECK(r.output.find("\"girth\": 2") != std::string::npos);
  CHECK(r.output.find("girth 2") != std::string::npos);
  CHECK(r.output.find("\"hypothesis_class\": false") != std::string::npos);
}

TEST_CASE("check reports failures and malformed input distinctly") {
  TempDir tmp;
  // non-WDRD: a strongly connected digraph with an attached pendant cycle
  const std::string bad = tmp.file("bad.json");
  write_text_file(bad, "{\"n\": 5, \"arcs\": [[0,1],[1,2],[2,0],[2,3],[3,4],[4,0],[1,3]]}\n");
  const RunResult r1 = run("check " + bad);
  CHECK(r1.status == 1);
  CHECK(r1.output.find("\"wdrd\": false") != std::string::npos);
  CHECK(r1.output.find("\"witness\"") != std::string::npos);

  // not strongly connected
  const std::string split = tmp.file("split.json");
  write_text_file(split, "{\"n\": 6, \"arcs\": [[0,1],[1,2],[2,0],[3,4],[4,5],[5,3]]}\n");
  const RunResult r2 = run("check " + split);
  CHECK(r2.status == 1);
  CHECK(r2.output.find("\"strongly_connected\": false") != std::string::npos);

  // malformed document
  const std::string garbage = tmp.file("garbage.json");
  write_text_file(garbage, "{\"n\": oops\n");
  CHECK(run("check " + garbage).status == 2);
  CHECK(run("check " + tmp.file("missing.json")).status == 2);

  // loops are rejected as a format error
  const std::string loop = tmp.file("loop.json");
  write_text_file(loop, "{\"n\": 2, \"arcs\": [[0,0]]}\n");
  CHECK(run("check " + loop).status == 2);
}

TEST_CASE("scheme command emits tensor and identities") {
  TempDir tmp;
  const std::string f = tmp.file("iii.json");
  REQUIRE(run("construct --family iii --out " + f).status == 0);
  const RunResult r = run("scheme " + f);
  CHECK(r.status == 0);
  CHECK(r.output.find("\"valencies\"") != std::string::npos);
  CHECK(r.output.find("\"tensor\"") != std::string::npos);
  for (const char* name : {"\"identity\": \"i\"", "\"identity\": \"vi\""})
    CHECK(r.output.find(name) != std::string::npos);
  CHECK(r.output.find("\"pass\": false") == std::string::npos);
}

TEST_CASE("table1 command verdicts") {
  CHECK(run("table1 --family vi --g 5").status == 0);
  CHECK(run("table1 --family viii --n 3").status == 0);
  const RunResult r = run("table1 --family vii --n 4");
  CHECK(r.status == 0);
  CHECK(r.output.find("\"mismatch_count\": 0") != std::string::npos);
  CHECK(r.output.find("\"checked\": 15") != std::string::npos);
  // parameter violations are usage errors
  CHECK(run("table1 --family vii --n 6").status == 2);
  CHECK(run("table1 --family vi --g 2").status == 2);
  CHECK(run("table1 --family i").status == 2);
}

TEST_CASE("construct rejects bad parameters") {
  CHECK(run("construct --family ix").status == 2);
  CHECK(run("construct --family vii --n 6").status == 2);
  CHECK(run("construct --family vi").status == 2);
}

TEST_CASE("enumerate and classify") {
  const RunResult r7 = run("enumerate --order 7 " + kCatalog);
  CHECK(r7.status == 0);
  CHECK(r7.output.find("\"complete_catalog\": true") != std::string::npos);
  CHECK(r7.output.find("\"connection\"") != std::string::npos);

  const RunResult c = run("classify --orders 7..9 " + kCatalog + " " + kData);
  CHECK(c.status == 0);
  CHECK(c.output.find("\"unmatched\": 0") != std::string::npos);
  CHECK(c.output.find("\"all_expected_cayley_found\": true") != std::string::npos);
  CHECK(c.output.find("\"vi g=3\"") != std::string::npos);

  // byte-stable across runs
  CHECK(run("classify --orders 7..9 " + kCatalog + " " + kData).output == c.output);

  CHECK(run("classify --orders 7 --catalog /nonexistent").status == 2);
}

TEST_CASE("sporadic cache and rederivation") {
  const RunResult direct = run("sporadic " + kData);
  CHECK(direct.status == 0);
  CHECK(direct.output ==
        read_text_file(fs::path(WDRD_DATA_DIR) / "sporadic18.json"));

  const RunResult re = run("sporadic --rederive " + kData);
  CHECK(re.status == 0);
  CHECK(re.output.find("\"matches_cache_bytes\": true") != std::string::npos);

  CHECK(run("sporadic --data /nonexistent").status == 2);
}

TEST_CASE("iso command verdicts") {
  TempDir tmp;
  const std::string a = tmp.file("a.json"), b = tmp.file("b.json"), c = tmp.file("c.json");
  REQUIRE(run("construct --family i --out " + a).status == 0);
  // negated connection set: isomorphic
  const FiniteGroup z7 = make_cyclic(7);
  write_digraph_file(cayley_digraph(z7, make_connection_set(z7, {3, 5, 6})), b);
  // directed 7-cycle: not isomorphic
  write_digraph_file(cayley_digraph(z7, make_connection_set(z7, {1})), c);

  const RunResult riso = run("iso " + a + " " + b);
  CHECK(riso.status == 0);
  CHECK(riso.output.find("\"isomorphic\": true") != std::string::npos);
  CHECK(run("iso " + a + " " + c).status == 1);
  CHECK(run("iso " + a + " nope.json").status == 2);
}

TEST_CASE("catalog directory comes from the environment when not given") {
  const std::string cmd = std::string("WDRD_CATALOG_DIR=") + WDRD_CATALOG_DIR + " " +
                          WDRD_CLI_PATH + " enumerate --order 7 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  const int rc = pclose(pipe);
  CHECK(WEXITSTATUS(rc) == 0);
  CHECK(output.find("\"complete_catalog\": true") != std::string::npos);
}

TEST_CASE("human-readable rendering") {
  TempDir tmp;
  const std::string f = tmp.file("i.json");
  REQUIRE(run("construct --family i --out " + f).status == 0);
  const RunResult r = run("check --human " + f);
  CHECK(r.status == 0);
  CHECK(r.output.find("weakly distance-regular: true") != std::string::npos);
  const RunResult t = run("table1 --human --family vi --g 4");
  CHECK(t.status == 0);
  CHECK(t.output.find("0 mismatches") != std::string::npos);
  const RunResult c = run("classify --human --orders 9 " + kCatalog + " " + kData);
  CHECK(c.status == 0);
  CHECK(c.output.find("vi g=3") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("check").status == 2);
  CHECK(run("--help").status == 0);
}
