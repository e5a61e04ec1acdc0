#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WVMAPS_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check") {
  REQUIRE(run("gen fixture --name cube -o cli_cube.smap").code == 0);
  Run ok = run("check cli_cube.smap");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("polyhedral") != std::string::npos);
  auto j = nlohmann::json::parse(run("check cli_cube.smap --json").out);
  CHECK(j["euler_char"] == 2);
  CHECK(j["polyhedral"] == true);

  REQUIRE(run("gen fixture --name h2_g2 -o cli_h2.smap").code == 0);
  Run bad = run("check cli_h2.smap --json");
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["reason"] == "improper face intersection");

  std::string text = slurp("cli_cube.smap");
  std::ofstream("cli_trunc.smap") << text.substr(0, text.size() / 2);
  CHECK(run("check cli_trunc.smap").code == 2);
  CHECK(run("check does_not_exist.smap").code == 2);
}

TEST_CASE("analyze") {
  REQUIRE(run("gen gamma --orientable -g 2 -o cli_g2.smap").code == 0);
  auto j = nlohmann::json::parse(run("analyze cli_g2.smap 0 1 --json").out);
  auto pair = j["pairs"][0];
  CHECK(pair["kappa"] == 4);
  CHECK(pair["wv_exists"] == false);
  CHECK(pair["cofacial"] == false);

  REQUIRE(run("gen fixture --name cube -o cli_cube.smap").code == 0);
  // The antipode of 0 is the one vertex reported non-cofacial.
  int far = -1;
  for (int v = 1; v < 8; ++v) {
    auto r = nlohmann::json::parse(run("analyze cli_cube.smap 0 " + std::to_string(v) + " --json").out);
    if (r["pairs"][0]["cofacial"] == false) far = v;
    else CHECK(r["pairs"][0]["wv_paths"].size() >= 1);
  }
  REQUIRE(far > 0);
  Run ex = run("analyze cli_cube.smap 0 " + std::to_string(far) + " --exhaustive --json");
  CHECK(ex.code == 0);
  auto e = nlohmann::json::parse(ex.out)["pairs"][0];
  CHECK(e["kappa"] == 3);
  CHECK(e["wv_disjoint"].get<int>() >= 3);
  CHECK(e["wv_count"].get<long long>() >= 3);
  bool tagged = false;
  for (auto& c : e["checks"]) tagged = tagged || c["tag"] == "T2.1";
  CHECK(tagged);

  CHECK(run("analyze cli_cube.smap 2 2").code == 2);
  REQUIRE(run("gen fixture --name h2_g2 -o cli_h2.smap").code == 0);
  CHECK(run("analyze cli_h2.smap 0 1").code == 1);
}

TEST_CASE("cofacial pairs short-circuit") {
  REQUIRE(run("gen fixture --name cube -o cli_cube.smap").code == 0);
  auto j = nlohmann::json::parse(run("analyze cli_cube.smap 0 1 --json").out)["pairs"][0];
  CHECK(j["cofacial"] == true);
  CHECK(j["wv_paths"].size() == 1);
}

TEST_CASE("gen") {
  Run g = run("gen gamma --orientable -g 2 -o cli_gen_a.smap");
  CHECK(g.code == 0);
  CHECK(g.out.find("10 vertices") != std::string::npos);
  CHECK(g.out.find("x = ") != std::string::npos);
  REQUIRE(run("gen gamma --orientable -g 2 -o cli_gen_b.smap").code == 0);
  CHECK(slurp("cli_gen_a.smap") == slurp("cli_gen_b.smap"));

  CHECK(run("gen fixture --name icosahedron -o cli_ico.smap").code == 0);
  auto j = nlohmann::json::parse(run("check cli_ico.smap --json").out);
  CHECK(j["euler_char"] == 2);

  CHECK(run("gen gamma --nonorientable -g 3 -o cli_bad.smap").code == 2);
  CHECK(run("gen gamma --nonorientable -g 5 -o cli_g5.smap").code == 0);
  CHECK(run("gen fixture --name nonsense -o cli_bad.smap").code == 2);
  CHECK(run("gen").code == 2);
}

TEST_CASE("verify") {
  Run a = run("verify --suite 2 --json");
  CHECK(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["pass"] == true);
  CHECK(j["tags"]["GAMMA_O"].get<int>() > 0);

  Run one = run("verify --suite 1,7 --json --jobs 1");
  Run four = run("verify --suite 1,7 --json --jobs 4");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);

  CHECK(run("verify --suite 9").code == 2);
}
