#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QTORBIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string catalog(const std::string& name) {
  return std::string(QTORBIT_CATALOG_DIR) + "/" + name + ".json";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name, const std::string& content) {
  const auto dir = fs::temp_directory_path() / "qtorbit_cli_test";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("dual") {
  auto r = run("dual " + catalog("sphere_boundary_3"));
  CHECK(r.code == 0);
  CHECK(r.out == "{\"ground\":[1,2,3],\"facets\":[[]]}\n");
  auto pts = run("dual " + catalog("three_points"));
  CHECK(pts.code == 0);
  CHECK(pts.out == slurp(catalog("three_points")));
  CHECK(run("dual " + catalog("simplex_3")).code == 2);
}

TEST_CASE("dual twice reproduces canonical input") {
  for (const auto* name : {"three_points", "two_disjoint_edges", "rp2_6", "path_3", "sphere_boundary_4"}) {
    const auto once = run("dual " + catalog(name));
    REQUIRE(once.code == 0);
    const auto path = scratch(std::string(name) + "_dual.json", once.out);
    const auto twice = run("dual " + path.string());
    CHECK(twice.code == 0);
    CHECK(twice.out == slurp(catalog(name)));
  }
}

TEST_CASE("homology") {
  auto rp = run("homology " + catalog("rp2_6"));
  CHECK(rp.code == 0);
  auto j = nlohmann::json::parse(rp.out);
  CHECK(j[2]["degree"] == 1);
  CHECK(j[2]["rank"] == 0);
  CHECK(j[2]["torsion"] == nlohmann::json::array({2}));
  auto s2 = nlohmann::json::parse(run("homology " + catalog("sphere_boundary_4")).out);
  CHECK(s2[3]["rank"] == 1);
  auto e = nlohmann::json::parse(run("homology " + catalog("empty")).out);
  CHECK(e[0]["degree"] == -1);
  CHECK(e[0]["rank"] == 1);
  CHECK(run("homology " + catalog("rp2_6") + " --format text").code == 0);
}

TEST_CASE("verify") {
  auto s = run("verify " + catalog("sphere_boundary_4"));
  CHECK(s.code == 0);
  auto j = nlohmann::json::parse(s.out);
  CHECK(j["j_star"] == 3);
  CHECK(j["verdicts"]["theorem1_holds"] == true);

  auto rp = run("verify " + catalog("rp2_6"));
  CHECK(rp.code == 0);
  CHECK(nlohmann::json::parse(rp.out)["homology"]["alexander"][5]["torsion"] == nlohmann::json::array({2}));

  auto m = run("verify --m " + catalog("three_points") + " --j 2");
  CHECK(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["j_star"] >= 2);
}

TEST_CASE("exit codes") {
  CHECK(run("homology /nonexistent/file.json").code == 2);
  const auto junk = scratch("junk.json", "{\"ground\": [1, 2");
  CHECK(run("homology " + junk.string()).code == 2);
  CHECK(run("dual " + scratch("notobj.json", "[1,2,3]").string()).code == 2);
  CHECK(run("verify " + catalog("simplex_3")).code == 2);
  CHECK(run("verify " + catalog("s0") + " --subtorus 2,0").code == 2);
  CHECK(run("verify --m " + catalog("s0")).code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("--help").code == 0);

  // A pair whose characteristic vectors break the stabilizer check.
  auto pair = nlohmann::ordered_json::parse(run("construct " + catalog("three_points")).out);
  auto ok = run("analyze " + scratch("pair.json", pair.dump()).string());
  CHECK(ok.code == 0);
  for (auto& entry : pair["lambda"]) {
    if (entry["vertex"] == nlohmann::ordered_json::parse(R"({"bary":[1,2]})")) {
      entry["value"] = nlohmann::ordered_json::array({2, 0, 0});
    }
  }
  CHECK(run("analyze " + scratch("bad_pair.json", pair.dump()).string()).code == 1);
}

TEST_CASE("output is deterministic") {
  const auto a = run("verify " + catalog("two_disjoint_circles") + " --format text");
  const auto b = run("verify " + catalog("two_disjoint_circles") + " --format text");
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  const auto s1 = run("sweep --n 4 --samples 5 --seed 9");
  const auto s2 = run("sweep --n 4 --samples 5 --seed 9");
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}
