#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "monosimplex/cli.hpp"

namespace fs = std::filesystem;
using monosimplex::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "monosimplex");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary in a fresh process.
Result spawn(const std::string& args) {
  const std::string cmd = std::string(MONOSIMPLEX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (const std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "monosimplex_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("rain commands") {
  auto r = cli({"rain", "subrain", "--len", "19", "--step", "1", "--target", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "rain(origin (0,1/6), step 6, length 3)\n");
  r = cli({"rain", "gen", "--len", "3"});
  CHECK(r.out == "rain(origin (0,0), step 1, length 3)\n(0,0)\n(1,0)\n(2,0)\n(0,1)\n(1,1)\n(0,1/2)\n");
  CHECK(cli({"rain", "contains", "--len", "19", "--point", "0,1/6"}).out == "true\n");
  CHECK(cli({"rain", "contains", "--len", "19", "--point", "13,1/6"}).out == "false\n");
  CHECK(cli({"rain", "contains", "--len", "2", "--dim", "3", "--point", "1,0,0"}).out == "true\n");
  CHECK(cli({"rain", "subrain", "--len", "5", "--dim", "3", "--target", "2"}).out ==
        "rain3d(origin (1/4,0,0), steps (2,2), length 2)\n");
  r = cli({"rain", "gen", "--len", "19", "--limit", "10"});
  CHECK(r.code == 3);
}

TEST_CASE("render command matches the golden files") {
  const std::string golden = std::string(MONOSIMPLEX_SOURCE_DIR) + "/tests/golden/";
  std::ifstream svg(golden + "rain19_sub3.svg"), txt(golden + "rain19_sub3.txt");
  std::stringstream a, b;
  a << svg.rdbuf();
  b << txt.rdbuf();
  CHECK(cli({"rain", "render", "--len", "19", "--target", "3"}).out == a.str());
  CHECK(cli({"rain", "render", "--len", "19", "--target", "3", "--format", "ascii"}).out == b.str());
  CHECK(cli({"rain", "render", "--len", "3", "--highlight", "0,1/2;1,1", "--format", "ascii"}).out ==
        "rain(origin (0,0), step 1, length 3)\ny=1   | * O\ny=1/2 | O\ny=0   | * * *\n");
  CHECK(cli({"rain", "render", "--len", "3", "--highlight", "5,5"}).code == 2);
}

TEST_CASE("vdw and sr commands") {
  CHECK(cli({"vdw", "compute", "--colors", "2", "--ap", "3"}).out == "9\n");
  const auto w = cli({"vdw", "compute", "--colors", "2", "--ap", "3", "--witness"});
  CHECK(w.out.size() == 2 + 9);
  const auto u = cli({"vdw", "compute", "--colors", "2", "--ap", "6", "--budget-nodes", "100"});
  CHECK(u.code == 3);
  CHECK(u.out.rfind("unknown", 0) == 0);
  CHECK(cli({"sr", "expr", "--colors", "3"}).out == "vdW_3(f(vdW_2(5)))\n");
  CHECK(cli({"sr", "expr", "--colors", "2", "--dim", "3"}).out == "vdW_2(M_2(F_3(2)))\n");
  const std::string table = std::string(MONOSIMPLEX_SOURCE_DIR) + "/data/vdw_known.txt";
  CHECK(cli({"sr", "eval", "--colors", "2", "--vdw-table", table}).out == "178\n");
  CHECK(cli({"sr", "eval", "--colors", "1"}).out == "2\n");
  CHECK(cli({"sr", "eval", "--colors", "3", "--vdw-table", table}).out.rfind("unknown: ", 0) == 0);
}

TEST_CASE("find then verify, in process and in a fresh process") {
  const auto dir = scratch();
  const std::string path = (dir / "cert.json").string();
  auto f = cli({"find", "triangle", "--coloring", "hash:2:0x1", "--out", path});
  REQUIRE(f.code == 0);
  CHECK(cli({"verify", path}).code == 0);
  CHECK(spawn("verify " + path).code == 0);
  CHECK(spawn("verify " + path).out.rfind("ok: color", 0) == 0);

  const std::string simplex = (dir / "simplex.json").string();
  REQUIRE(cli({"find", "simplex", "--dim", "3", "--coloring", "hash:2:0x2", "--volume", "1/3", "--out", simplex}).code == 0);
  CHECK(spawn("verify " + simplex).code == 0);

  const std::string many = (dir / "many.json").string();
  REQUIRE(cli({"find", "triangle", "--coloring", "hash:3:7", "--count", "3", "--area", "5/2", "--out", many}).code == 0);
  const auto v = cli({"verify", many});
  CHECK(v.code == 0);
  CHECK(v.out.find("certificate 2: ok") != std::string::npos);

  const auto stdout_cert = cli({"find", "triangle", "--coloring", "hash:2:0x1"});
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(stdout_cert.out == s.str());
  fs::remove_all(dir);
}

TEST_CASE("verify rejects tampered certificates") {
  const auto dir = scratch();
  const std::string path = (dir / "cert.json").string();
  REQUIRE(cli({"find", "triangle", "--coloring", "hash:2:0x1", "--out", path}).code == 0);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  in.close();
  std::string text = s.str();
  const auto at = text.find("\"hash:2:0x1\"");
  REQUIRE(at != std::string::npos);
  text.replace(at, 12, "\"const:2:" + std::string(text.find("\"color\": 0") != std::string::npos ? "1" : "0") + "\"");
  std::ofstream(path) << text;
  const auto v = cli({"verify", path});
  CHECK(v.code == 4);
  CHECK(v.out.find("FAILED") != std::string::npos);
  std::ofstream(path) << "{ not json";
  CHECK(cli({"verify", path}).code == 2);
  CHECK(cli({"verify", (dir / "missing.json").string()}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("exit codes and environment") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"rain", "gen"}).code == 2);
  CHECK(cli({"rain", "subrain", "--len", "18", "--target", "3"}).code == 2);
  CHECK(cli({"find", "triangle", "--coloring", "const:0:0"}).code == 2);
  CHECK(cli({"find", "triangle", "--coloring", "hash:3:5", "--budget-queries", "5"}).code == 3);
  CHECK(cli({"find", "triangle", "--coloring", "hash:3:5", "--faithful"}).code == 3);
  CHECK(cli({"find", "triangle", "--coloring", "const:1:0", "--product", "2", "--area", "1"}).code == 2);
  CHECK(cli({"find", "triangle", "--coloring", "const:2:1", "--seed", "3"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  setenv("MONOSIMPLEX_COLORING", "const:1:0", 1);
  const auto r = cli({"find", "triangle"});
  unsetenv("MONOSIMPLEX_COLORING");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"const:1:0\"") != std::string::npos);
  const auto seeded = cli({"find", "triangle", "--coloring", "hash:2:0", "--seed", "0x1"});
  CHECK(seeded.out == cli({"find", "triangle", "--coloring", "hash:2:0x1"}).out);
}

}
