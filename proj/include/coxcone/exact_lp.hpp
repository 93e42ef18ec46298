#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coxcone/matrix.hpp"

namespace coxcone {

enum class Relation { kEq, kGe, kLe };

// coeffs · x  (rel)  rhs
struct LinearConstraint {
  Vector coeffs;
  Relation rel = Relation::kEq;
  Scalar rhs;
};

// Exact feasibility for a system over free real variables. Runs phase one of
// the primal simplex method with Bland's rule over Scalar arithmetic.
// Returns a feasible point, or nullopt if the system is infeasible.
std::optional<Vector> find_feasible_point(std::size_t num_vars,
                                          const std::vector<LinearConstraint>& constraints);

bool satisfies(const LinearConstraint& c, const Vector& x);

}  // namespace coxcone
