#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgsc {

struct CriterionResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

/// Runs every acceptance criterion, printing one PASS/FAIL line per
/// criterion to `log` as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

}  // namespace dgsc
