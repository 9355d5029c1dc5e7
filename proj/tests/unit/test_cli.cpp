#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kScratch = fs::temp_directory_path() / "wilsonctl_cli_test";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  fs::create_directories(kScratch);
  const fs::path out = kScratch / "out.txt";
  const std::string cmd =
      std::string(WILSONCTL_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::create_directories(kScratch);
  const fs::path p = kScratch / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("verify algebra on the canonical set") {
  const Run r = run("--format csv verify --suite algebra");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("name,anchor,method,max_degree_or_grid,residual,status\n", 0) == 0);
  CHECK(r.out.find("T_1^2 = t_1^2,defining relations,exact,deg <= 20,0,pass") != std::string::npos);
}

TEST_CASE("reports are deterministic and echo the config") {
  const Run a = run("--seed 5 verify --suite polynomials");
  const Run b = run("--seed 5 verify --suite polynomials");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["meta"]["seed"] == 5);
  CHECK(j["meta"]["params"][0] == "2/3");
  CHECK(j["rows"].size() > 5);
}

TEST_CASE("exit codes") {
  CHECK(run("verify --suite polynomials --corrupt-gamma 3").code == 1);
  CHECK(run("--params 1/2,0,1/2,0 verify --suite algebra").code == 2);
  CHECK(run("--params 1/2,0,1/2 verify --suite algebra").code == 3);
  CHECK(run("--params a,b,c,d verify").code == 3);
  CHECK(run("verify --suite nonsense").code == 3);
  CHECK(run("--config " + write_file("bad.toml", "params = [1]\n") + " verify --suite algebra")
            .code == 3);
  const std::string bad = write_file("bad.json", R"({"type": "poly", "coefficients": ["1/0"]})");
  CHECK(run("transform --kind F --input " + bad).code == 3);
  const std::string odd = write_file("odd.json", R"({"type": "poly", "coefficients": [0, 1]})");
  CHECK(run("transform --kind Fplus --input " + odd).code == 3);
  CHECK(run("transform --kind G --input " + odd).code == 3);
  const std::string one = write_file("one.json", R"({"type": "poly", "coefficients": [1]})");
  CHECK(run("--tol numeric=1e-40 transform --kind calF --input " + one).code == 4);
}

TEST_CASE("config file with flag overrides") {
  const std::string cfg = write_file(
      "cfg.json", R"({"params": ["1/5", "1/7", "2/3", "1/9"], "max_degree": 4, "format": "csv"})");
  const Run r = run("--config " + cfg + " --max-degree 3 verify --suite algebra");
  CHECK(r.code == 0);
  CHECK(r.out.find("deg <= 3") != std::string::npos);
}

TEST_CASE("exact-only parameters skip the numeric checks") {
  const Run r = run("--params 2/3,1/5,-3/5,1/7 --format csv verify --suite all");
  CHECK(r.code == 0);
  CHECK(r.out.find("skipped: exact-only mode") != std::string::npos);
  CHECK(r.out.find(",fail") == std::string::npos);
}

TEST_CASE("gen-polys tables") {
  const Run r = run("--format json gen-polys --family nonsymmetric --max-m 4");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 5);
  CHECK(j["rows"][1]["coefficients"] == json::array({"-8657/31164", "1"}));
  CHECK(j["rows"][2]["value_at_minus_x0"] == "1749407/999600");
  const json s = json::parse(run("gen-polys --family symmetric --max-m 1").out);
  CHECK(s["rows"][0]["coefficients"] == json::array({"1"}));
  const json a = json::parse(run("gen-polys --family antisymmetric --max-m 1").out);
  // (a+x)(b+x) with a = 26/35, b = 16/35
  CHECK(a["rows"][0]["coefficients"] == json::array({"416/1225", "6/5", "1"}));
}

TEST_CASE("transform round trip G F = N id") {
  const std::string x = write_file("x.json", R"({"type": "poly", "coefficients": ["0", "1"]})");
  const Run f = run("transform --kind F --input " + x);
  REQUIRE(f.code == 0);
  json spectral = json::parse(f.out)["result"];
  CHECK(spectral["values"].size() == 2);
  CHECK(spectral.contains("log_scale"));
  const std::string fx = write_file("fx.json", spectral.dump());
  const Run g = run("transform --kind G --input " + fx);
  REQUIRE(g.code == 0);
  const json back = json::parse(g.out)["result"];
  CHECK(back["coefficients"] == json::array({"0", "1"}));
  CHECK(back["scale"]["bits"] == 160);
}

TEST_CASE("calF on e_gamma0 is (a+b) times the dual basis element") {
  const std::string one = write_file("one.json", R"({"type": "poly", "coefficients": [1]})");
  const Run r = run("transform --kind calF --input " + one);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["meta"]["image_coefficients"] == json::array({"6/5"}));
  CHECK(j["rows"].size() == 3);
  for (const auto& row : j["rows"]) CHECK(std::stod(row["error"].get<std::string>()) < 1e-8);
}
