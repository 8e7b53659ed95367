#pragma once

#include <string>
#include <vector>

namespace nilab {

struct Check {
  std::string name;
  std::string formula;  // the relation being checked
  bool pass = false;
  std::string details;
};

struct CheckReport {
  std::vector<Check> checks;

  void add(std::string name, std::string formula, bool pass, std::string details = {}) {
    checks.push_back({std::move(name), std::move(formula), pass, std::move(details)});
  }
  void append(const CheckReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass)
        return false;
    return true;
  }
  /// Names of failed checks, comma separated.
  std::string failures() const {
    std::string out;
    for (const auto& c : checks)
      if (!c.pass)
        out += (out.empty() ? "" : ", ") + c.name + (c.details.empty() ? "" : " (" + c.details + ")");
    return out;
  }
};

} // namespace nilab
