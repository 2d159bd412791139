#pragma once

// Built-in verification scenarios. Each runs a fixed computation (random
// inputs come from fixed seeds) and reports one line per check.

#include <string>
#include <string_view>
#include <vector>

namespace inalg {

struct ScenarioCheck {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct ScenarioReport {
  std::string name;
  std::vector<ScenarioCheck> checks;

  bool passed() const;
  /// `PASS <name>: <label>` or `FAIL ...` lines, details indented below failures.
  std::string text() const;
};

const std::vector<std::string>& scenario_names();

/// Throws InvalidArgument for unknown names. Exceptions raised inside a
/// scenario become failed checks.
ScenarioReport run_scenario(std::string_view name);

}  // namespace inalg
