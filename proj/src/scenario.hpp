#pragma once

#include <string>
#include <vector>

namespace bidisk::scenario {

// One named comparison inside a scenario. The rule is uniform: the check
// passes iff |computed - expected| <= tolerance. Inequality-style checks
// store the violation amount in `computed` against an expectation of zero.
struct CheckRecord {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ScenarioReport {
  std::string id;
  std::vector<CheckRecord> checks;
  bool overall = false;  // true iff every record passes
};

// Names accepted by run_scenario, in fixed order.
const std::vector<std::string>& registry();

// Runs one scenario end to end. Throws std::invalid_argument for a name
// outside the registry; numerical failures inside a check are caught and
// recorded as failing entries rather than thrown.
ScenarioReport run_scenario(const std::string& name);

// Report as a single JSON document (trailing newline included).
std::string report_to_json(const ScenarioReport& report);

}  // namespace bidisk::scenario
