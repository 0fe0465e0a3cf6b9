#include <chrono>
#include <iomanip>
#include <sstream>

#include "tvx/rational.hpp"
#include "tvx/suite.hpp"

namespace tvx {

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "syzygy", "wigner", "bridge", "symgroup", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int trials) {
  if (!is_suite(name)) throw Error("unknown suite: " + name);
  SuiteReport report{name, seed, trials, {}};
  for (const auto& spec : all_checks()) {
    if (name != "all" && spec.suite != name) continue;
    CheckResult res{spec.id, spec.title, false, "", "", 0, spec.limit_seconds};
    auto start = std::chrono::steady_clock::now();
    try {
      CheckOutcome out = spec.run(seed, trials);
      res.pass = out.pass;
      res.expected = out.expected;
      res.actual = out.actual;
    } catch (const std::exception& e) {
      res.actual = std::string("error: ") + e.what();
    }
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.elapsed_seconds > spec.limit_seconds) {
      res.pass = false;
      res.actual += " [time limit exceeded]";
    }
    report.checks.push_back(std::move(res));
  }
  return report;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id},
                      {"title", c.title},
                      {"status", c.pass ? "pass" : "fail"},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"elapsed_seconds", c.elapsed_seconds},
                      {"limit_seconds", c.limit_seconds}});
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"trials", report.trials},
          {"status", report.pass() ? "pass" : "fail"},
          {"checks", checks}};
}

std::string to_table(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << "  seed " << report.seed << "  trials " << report.trials << "\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << std::fixed << std::setprecision(2) << std::setw(7)
        << c.elapsed_seconds << "s  " << c.title << "\n";
    if (!c.pass) out << "      expected: " << c.expected << "\n      actual:   " << c.actual << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.pass ? 1 : 0;
  out << passed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace tvx
