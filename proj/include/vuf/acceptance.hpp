#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vuf {

struct CriterionResult {
  std::string id;  // "1" ... "8e"
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs every acceptance criterion; failures are recorded, never thrown.
std::vector<CriterionResult> run_acceptance();

/// One "PASS|FAIL <id> <title> -- <detail>" line per criterion; returns true
/// when all pass.
bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace vuf
