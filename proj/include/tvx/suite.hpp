#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tvx {

struct CheckOutcome {
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct CheckSpec {
  std::string id;     // "C01" … "C13", one per acceptance criterion
  std::string suite;  // core, syzygy, wigner, bridge, symgroup
  std::string title;
  double limit_seconds;
  std::function<CheckOutcome(std::uint64_t seed, int trials)> run;
};

const std::vector<CheckSpec>& all_checks();

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string expected;
  std::string actual;
  double elapsed_seconds = 0;
  double limit_seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs every check of the suite ("all" runs everything) in canonical order.
/// A check that throws or exceeds its time limit fails.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int trials);

/// Timing fields are the only ones that vary between runs with the same seed.
nlohmann::json to_json(const SuiteReport& report);
std::string to_table(const SuiteReport& report);

}  // namespace tvx
