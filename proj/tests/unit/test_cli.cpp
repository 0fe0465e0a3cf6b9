#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include <json.hpp>

#include "tvx/suite.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TVX_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json without_timing(json report) {
  for (auto& c : report["checks"]) c.erase("elapsed_seconds");
  return report;
}

}  // namespace

TEST_CASE("transvect") {
  Run r = run("--format json transvect --m 2 --n 2 --r 2 --A 1,0,0 --B 0,0,1");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["order"] == 0);
  CHECK(j["coeffs"] == json::array({"1/1"}));

  Run b = run("--format json transvect --m 2 --n 2 --r 1 --A '[\"1\",\"1\",\"1\"]' --B 0,1,0 --convention binomial");
  CHECK(b.code == 0);
  CHECK(json::parse(b.out)["convention"] == "binomial");

  CHECK(run("transvect --m 2 --n 2 --r 3 --A 1,0,0 --B 0,0,1").code == 2);
  CHECK(run("transvect --m 3 --n 2 --r 1 --A 1,0,0 --B 0,0,1").code == 2);
  CHECK(run("transvect --m 2 --n 2 --r 1 --A '{bad' --B 0,0,1").code == 2);
}

TEST_CASE("syzygy tables and verification") {
  Run t = run("--format json syzygy --m 5 --n 3 --r 2 --a 0 --b 0");
  CHECK(t.code == 0);
  CHECK(json::parse(t.out)["m"] == 5);
  CHECK(run("syzygy --m 5 --n 3 --r 3 --closed").code == 0);
  CHECK(run("syzygy --m 5 --n 3 --r 2 --a 0 --b 0 verify --trials 5 --seed 42").code == 0);
  CHECK(run("syzygy --m 4 --n 4 --r 4 --closed verify --symbolic").code == 0);
  CHECK(run("syzygy --m 5 --n 3 --r 1 --closed").code == 2);
  CHECK(run("syzygy --m 5 --n 3 --r 2 --a 0").code == 2);
}

TEST_CASE("reconstruct") {
  // A = x1^2, B = x2^2: u0 = x1^2 x2^2, u1 = x1 x2, u2 = 1.
  Run r = run("--format json reconstruct --m 2 --n 2 --u0 0,0,1,0,0 --u1 0,1,0");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["coeffs"] == json::array({"1/1"}));
}

TEST_CASE("wigner symbols") {
  Run n = run("--format json ninej --array '1/2 1/2 1; 1/2 1/2 1; 1 1 0' --method both");
  CHECK(n.code == 0);
  CHECK(json::parse(n.out)["agree"] == true);
  Run t = run("threej --j '1/2 1/2 1' --mj '1/2 1/2 -1'");
  CHECK(t.code == 0);
  CHECK(t.out.find("sqrt(3)") != std::string::npos);
  Run s = run("sixj --array '0 0 0; 0 0 0'");
  CHECK(s.out == "1/1 * sqrt(1)\n");
  CHECK(run("ninej --array '1 1 3; 0 0 0; 1 1 3'").code == 2);
}

TEST_CASE("symmetric group commands") {
  Run t = run("--format json sym tableaux --shape 3,2");
  CHECK(t.code == 0);
  CHECK(json::parse(t.out).size() == 5);
  Run m = run("sym mult --l 3,2 --m 3,2 --n 4,1");
  CHECK(m.out == "1\n");
  Run p = run("--format json sym projmat --l 3,1 --m 2,2 --n 2,1,1");
  CHECK(p.code == 0);
  json j = json::parse(p.out);
  CHECK(j.size() == 6);
  CHECK(j[0] == json::array({"2/1", "1/1", "1/1"}));
  CHECK(run("sym verify --d 6").code == 0);
  CHECK(run("sym verify --d 4").code == 2);
}

TEST_CASE("verify runner") {
  CHECK(run("verify --suite nonsense").code == 2);
  CHECK(run("").code == 2);

  std::string a = "/tmp/tvx_cli_test_a.json", b = "/tmp/tvx_cli_test_b.json";
  Run first = run("--out " + a + " verify --suite core --seed 42 --trials 5");
  Run second = run("--out " + b + " verify --suite core --seed 42 --trials 5");
  CHECK(first.code == 0);
  CHECK(first.out.find("PASS C13") != std::string::npos);
  json ja = json::parse(std::ifstream(a)), jb = json::parse(std::ifstream(b));
  CHECK(ja["status"] == "pass");
  CHECK(without_timing(ja).dump() == without_timing(jb).dump());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("every criterion has exactly one check") {
  std::set<std::string> ids;
  for (const auto& c : tvx::all_checks()) {
    CHECK(ids.insert(c.id).second);
    CHECK(tvx::is_suite(c.suite));
    CHECK(c.suite != "all");
  }
  CHECK(ids.size() == 13);
  CHECK(ids.count("C01") == 1);
  CHECK(ids.count("C13") == 1);
}
