#include <iostream>

#include "coxcone/selftest.hpp"

int main() {
  bool all = true;
  coxcone::run_selftest({}, [&](const coxcone::CriterionResult& r) {
    all = all && r.passed;
    std::cout << coxcone::format_result(r) << std::endl;
  });
  return all ? 0 : 1;
}
