#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("fimhom_cli_" + std::to_string(counter++) + ".out");
  std::string cmd = std::string(FIMHOM_BIN) + " " + args + " > " + out.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.status = WEXITSTATUS(rc);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  fs::remove(out);
  return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

const char* kTorsionK0 = R"({ "field": 3, "m": 1, "bounds": [6],
  "generators": [ [0] ],
  "relations": [ { "object": [1],
                   "terms": [ { "gen": 0, "maps": [ [] ], "coeff": 1 } ] } ] })";

}  // namespace

TEST_CASE("analyze reports the torsion class exactly") {
  fs::path p = write_file("fimhom_k0.json", kTorsionK0);
  RunResult r = run_cli("analyze " + p.string() + " --smax 3");
  CHECK(r.status == 0);
  CHECK(r.output.find("hd=[0,1,2,3]") != std::string::npos);
  CHECK(r.output.find("reg=0") != std::string::npos);
  CHECK(r.output.find("t=(0)") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("analyze of a free presentation") {
  fs::path p = write_file("fimhom_free.json",
                          R"({ "field": 2, "m": 1, "bounds": [3], "generators": [[1]] })");
  RunResult r = run_cli("analyze " + p.string() + " --smax 2");
  CHECK(r.status == 0);
  CHECK(r.output.find("gd=1 prd=1") != std::string::npos);
  CHECK(r.output.find("reg=1") != std::string::npos);
  CHECK(r.output.find("t=(-1)") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("zero presentation gives the all-empty report with exit 0") {
  fs::path p = write_file("fimhom_zero.json",
                          R"({ "field": 5, "m": 2, "bounds": [2, 2], "generators": [] })");
  RunResult r = run_cli("analyze " + p.string());
  CHECK(r.status == 0);
  CHECK(r.output.find("reg=-inf") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("parse diagnostics carry exit status 2") {
  SUBCASE("non-prime field") {
    fs::path p = write_file("fimhom_bad1.json",
                            R"({ "field": 4, "m": 1, "bounds": [3], "generators": [[0]] })");
    RunResult r = run_cli("analyze " + p.string());
    CHECK(r.status == 2);
    CHECK(r.output.find("field must be prime") != std::string::npos);
    fs::remove(p);
  }
  SUBCASE("duplicate image") {
    fs::path p = write_file("fimhom_bad2.json",
                            R"({ "field": 3, "m": 1, "bounds": [3], "generators": [[2]],
      "relations": [ { "object": [2], "terms": [ { "gen": 0, "maps": [ [1,1] ], "coeff": 1 } ] } ] })");
    RunResult r = run_cli("analyze " + p.string());
    CHECK(r.status == 2);
    CHECK(r.output.find("duplicate image") != std::string::npos);
    fs::remove(p);
  }
  SUBCASE("wrong image-list length") {
    fs::path p = write_file("fimhom_bad3.json",
                            R"({ "field": 3, "m": 1, "bounds": [3], "generators": [[2]],
      "relations": [ { "object": [2], "terms": [ { "gen": 0, "maps": [ [1] ], "coeff": 1 } ] } ] })");
    RunResult r = run_cli("analyze " + p.string());
    CHECK(r.status == 2);
    CHECK(r.output.find("wrong image-list length") != std::string::npos);
    fs::remove(p);
  }
  SUBCASE("object out of bounds") {
    fs::path p = write_file("fimhom_bad4.json",
                            R"({ "field": 3, "m": 1, "bounds": [3], "generators": [[7]] })");
    RunResult r = run_cli("analyze " + p.string());
    CHECK(r.status == 2);
    CHECK(r.output.find("out of bounds") != std::string::npos);
    fs::remove(p);
  }
  SUBCASE("missing file") {
    RunResult r = run_cli("analyze /nonexistent/missing.json");
    CHECK(r.status == 2);
  }
  SUBCASE("usage error") {
    RunResult r = run_cli("analyze");
    CHECK(r.status == 2);
  }
}

TEST_CASE("tree command on the torsion class") {
  fs::path p = write_file("fimhom_k0t.json", kTorsionK0);
  RunResult r = run_cli("tree " + p.string());
  CHECK(r.status == 0);
  CHECK(r.output.find("nodes=2 depth=1 terminated=yes") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("verify command on a file is clean for a free module") {
  fs::path p = write_file("fimhom_freev.json",
                          R"({ "field": 2, "m": 1, "bounds": [4], "generators": [[1]] })");
  RunResult r = run_cli("verify " + p.string());
  CHECK(r.status == 0);
  CHECK(r.output.find("fail=0") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("identical verify invocations are byte-identical") {
  std::string args = "verify --random --seed 7 --count 3 --m 2 --bounds 3,3 --field 2";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("fail=0") != std::string::npos);
}

TEST_CASE("json reports round-trip through the parser") {
  fs::path p = write_file("fimhom_k0j.json", kTorsionK0);
  for (const std::string& cmd : {std::string("analyze "), std::string("resolve ")}) {
    RunResult r = run_cli(cmd + p.string() + " --smax 2 --format json");
    CHECK(r.status == 0);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.output);
    CHECK(j.dump(2) + "\n" == r.output);
  }
  fs::remove(p);
}
