#include "coxcone/exact_lp.hpp"

#include <cassert>

namespace coxcone {

std::optional<Vector> find_feasible_point(std::size_t num_vars,
                                          const std::vector<LinearConstraint>& constraints) {
  const std::size_t m = constraints.size();
  if (m == 0) return Vector(num_vars);

  std::size_t num_slacks = 0;
  for (const auto& c : constraints) {
    if (c.rel != Relation::kEq) ++num_slacks;
  }
  // Columns: x+ (n), x- (n), slacks, artificials, rhs.
  const std::size_t n = num_vars;
  const std::size_t art0 = 2 * n + num_slacks;
  const std::size_t cols = art0 + m + 1;
  const std::size_t rhs = cols - 1;
  Matrix t(m + 1, cols);  // last row: phase-one reduced costs
  std::vector<std::size_t> basis(m);

  std::size_t slack = 2 * n;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    assert(c.coeffs.size() == n);
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = c.coeffs[j];
      t(i, n + j) = -c.coeffs[j];
    }
    if (c.rel == Relation::kGe) t(i, slack++) = -1;
    if (c.rel == Relation::kLe) t(i, slack++) = 1;
    t(i, rhs) = c.rhs;
    if (c.rhs.sign() < 0) {
      for (std::size_t j = 0; j < art0; ++j) t(i, j) = -t(i, j);
      t(i, rhs) = -t(i, rhs);
    }
    t(i, art0 + i) = 1;
    basis[i] = art0 + i;
  }
  for (std::size_t j = 0; j < art0; ++j) {
    for (std::size_t i = 0; i < m; ++i) t(m, j) -= t(i, j);
  }
  for (std::size_t i = 0; i < m; ++i) t(m, rhs) -= t(i, rhs);

  while (true) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t(m, j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Scalar best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter).sign() <= 0) continue;
      Scalar ratio = t(i, rhs) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    assert(leave != m);  // phase one is bounded below by zero
    const Scalar pivot_inv = t(leave, enter).inverse();
    for (std::size_t j = 0; j < cols; ++j) t(leave, j) *= pivot_inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t(i, enter).is_zero()) continue;
      const Scalar f = t(i, enter);
      for (std::size_t j = 0; j < cols; ++j) {
        if (!t(leave, j).is_zero()) t(i, j) -= f * t(leave, j);
      }
    }
    basis[leave] = enter;
  }

  if (!t(m, rhs).is_zero()) return std::nullopt;
  Vector y(art0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < art0) y[basis[i]] = t(i, rhs);
  }
  Vector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  return x;
}

bool satisfies(const LinearConstraint& c, const Vector& x) {
  const int s = (dot(c.coeffs, x) - c.rhs).sign();
  switch (c.rel) {
    case Relation::kEq:
      return s == 0;
    case Relation::kGe:
      return s >= 0;
    case Relation::kLe:
      return s <= 0;
  }
  return false;
}

}  // namespace coxcone
