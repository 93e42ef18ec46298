#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace coxcone {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  bool h4 = false;  // adds the H4 λ₃ nef computation (about a minute)
  std::uint32_t seed = 20240611;
};

// Runs the acceptance suite, calling `report` after each criterion.
std::vector<CriterionResult> run_selftest(
    const SelftestOptions& options,
    const std::function<void(const CriterionResult&)>& report = {});

// "[PASS] 3 oracle equivalence: ..." on one line.
std::string format_result(const CriterionResult& r);

}  // namespace coxcone
