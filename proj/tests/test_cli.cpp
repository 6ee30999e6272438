#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

// stdout only; stderr is discarded
Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + BHCALC_PATH + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("spherical json") {
  Run r = run("spherical --rank 2 --lambda 1,0 --char eps --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("closed_form"));
  CHECK(j.contains("sum_form"));
  CHECK(j["equal"] == true);
  CHECK(j["closed_form"] == j["sum_form"]);
}

TEST_CASE("shalika text") {
  Run r = run("shalika --lambda 1,0");
  CHECK(r.code == 0);
  CHECK(r.out == "x1 + x2 + 1 + x2^-1 + x1^-1 - q^-1\n");
}

TEST_CASE("pipeline") {
  Run r = run("pipeline --char eps --rank 3");
  CHECK(r.code == 0);
  CHECK(r.out == "[2,2,2]\n");
  CHECK(run("pipeline --char sigma --rank 2").code == 3);
}

TEST_CASE("orbit listings") {
  Run r = run("orbits --algebra C --N 4");
  CHECK(r.out == "[4]\n[2,2]\n[2,1,1]\n[1,1,1,1]\n");
  Run l = run("orbits --algebra C --N 6 --special --format latex");
  // six rows in the table order
  std::vector<std::string> rows = {"$[6]$", "$[4,2]$", "$[3^{2}]$", "$[2^{3}]$", "$[2^{2},1^{2}]$",
                                   "$[1^{6}]$"};
  size_t pos = 0;
  for (auto& row : rows) {
    size_t at = l.out.find(row, pos);
    CHECK(at != std::string::npos);
    pos = at;
  }
  CHECK(run("orbits --algebra C --N 5").code == 3);
}

TEST_CASE("format from the environment") {
  Run r = run("pipeline --char eps --rank 2", "BHCALC_FORMAT=json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["orbit"] == nlohmann::json::array({2, 2}));
  CHECK(run("pipeline --char eps --rank 2 --format latex").out == "$[2^{2}]$\n");
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("spherical --rank 2").code == 2);
  CHECK(run("spherical --rank 2 --lambda x,1").code == 2);
  CHECK(run("verify --suite nosuch").code == 2);
  CHECK(run("spherical --rank 2 --lambda 0,1").code == 3);
  CHECK(run("iwahori --rank 2 --lambda 0,0 --word 1-1").code == 3);
  CHECK(run("--format yaml pipeline --char eps --rank 2").code == 2);
}

TEST_CASE("verification reports") {
  Run ok = run("verify --suite special-tables");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  Run bad = run("verify --suite conjugation");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("displayed formula C2 short") != std::string::npos);
  Run j = run("verify --suite denominator --format json");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["results"].size() == 3);
  CHECK(doc["pass"] == true);
}

TEST_CASE("deterministic output") {
  CHECK(run("spherical --rank 3 --lambda 1,0,0").out == run("spherical --rank 3 --lambda 1,0,0").out);
  CHECK(run("verify --suite iwahori").out == run("verify --suite iwahori").out);
}

TEST_CASE("iwahori and wo") {
  CHECK(run("iwahori --rank 2 --lambda 0,0 --word e").out == "# xi_i = x_i^(1/2)\nxi1*xi2\n");
  CHECK(run("iwahori --rank 2 --lambda 0,0 --word 1").out == "# xi_i = x_i^(1/2)\nq*xi1*xi2\n");
  CHECK(run("wo --lambda 0,0,0").out == "1\n");
  CHECK(run("wo --lambda 1,0,0").out == "x1 + x2 + 1 + x2^-1 + x1^-1 - q^-1\n");
}
