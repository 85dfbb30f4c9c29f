#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tightcount::verify {

struct Check {
  std::string name;
  bool pass = false;
  // Informational rows report values without asserting them (used for the
  // degenerate n = 1 rows of the recurrences, whose derivation needs n >= 2).
  bool informational = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool all_pass() const;
};

// Suites: "ncf", "identities", "kaplansky", "states", "torus".  `scale`
// stretches the sweep bounds (suite-specific; <= 0 picks the default).
// Throws std::domain_error for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::int64_t scale = 0);

const std::vector<std::string>& suite_names();

std::string to_text(const std::vector<SuiteReport>& reports);
std::string to_json(const std::vector<SuiteReport>& reports);

}  // namespace tightcount::verify
