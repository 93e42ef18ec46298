#include <random>

#include <gtest/gtest.h>

#include "coxcone/error.hpp"
#include "coxcone/exact_lp.hpp"
#include "coxcone/matrix.hpp"

namespace coxcone {
namespace {

// Dense Gaussian elimination, used as the reference for the sparse one.
std::size_t dense_rank(std::vector<Vector> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      rows[r] = sub(rows[r], scale(rows[r][c] / rows[rank][c], rows[rank]));
    }
    ++rank;
  }
  return rank;
}

TEST(MatrixTest, InverseAndProduct) {
  const Matrix m = Matrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  const Matrix inv = m.inverse();
  EXPECT_EQ(m * inv, Matrix::identity(3));
  EXPECT_EQ(inv(0, 0), Scalar::fraction(3, 4));
  EXPECT_EQ(m.transpose(), m);
  EXPECT_THROW(Matrix::from_rows({{1, 2}, {2, 4}}).inverse(), DivisionByZero);
}

TEST(MatrixTest, GoldenEntries) {
  const Scalar phi = Scalar::golden();
  const Matrix m = Matrix::from_rows({{Scalar(2), -phi}, {-phi, Scalar(2)}});
  EXPECT_EQ(m * m.inverse(), Matrix::identity(2));
}

TEST(SparseEliminatorTest, MatchesDenseRank) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> keep(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t cols = 6;
    std::vector<Vector> dense;
    std::vector<SparseRow> sparse;
    for (int r = 0; r < 8; ++r) {
      Vector row(cols);
      SparseRow srow;
      for (std::size_t c = 0; c < cols; ++c) {
        if (keep(rng) != 0) continue;
        row[c] = coef(rng);
        if (!row[c].is_zero()) srow.emplace_back(c, row[c]);
      }
      dense.push_back(row);
      sparse.push_back(srow);
    }
    EXPECT_EQ(sparse_rank(cols, sparse), dense_rank(dense, cols));
  }
}

TEST(ExactLpTest, FindsFeasiblePoints) {
  // x + y = 1, x - y >= 1/2, y >= 0 (free variables otherwise).
  const std::vector<LinearConstraint> cons = {
      {{1, 1}, Relation::kEq, Scalar(1)},
      {{1, -1}, Relation::kGe, Scalar::fraction(1, 2)},
      {{0, 1}, Relation::kGe, Scalar(0)},
  };
  const auto x = find_feasible_point(2, cons);
  ASSERT_TRUE(x.has_value());
  for (const auto& c : cons) EXPECT_TRUE(satisfies(c, *x));
}

TEST(ExactLpTest, DetectsInfeasibility) {
  const std::vector<LinearConstraint> cons = {
      {{1, 0}, Relation::kGe, Scalar(2)},
      {{1, 0}, Relation::kLe, Scalar(1)},
  };
  EXPECT_FALSE(find_feasible_point(2, cons).has_value());
}

TEST(ExactLpTest, NegativeFreeVariables) {
  const std::vector<LinearConstraint> cons = {
      {{1}, Relation::kLe, Scalar(-3)},
      {{1}, Relation::kGe, Scalar(-5)},
  };
  const auto x = find_feasible_point(1, cons);
  ASSERT_TRUE(x.has_value());
  EXPECT_LE((*x)[0], Scalar(-3));
  EXPECT_GE((*x)[0], Scalar(-5));
}

TEST(ExactLpTest, IrrationalCoefficients) {
  const Scalar phi = Scalar::golden();
  // phi·x >= 1 and x <= 1/phi + 1/100 is feasible; x <= 1/phi - 1/100 is not.
  std::vector<LinearConstraint> cons = {{{phi}, Relation::kGe, Scalar(1)},
                                        {{1}, Relation::kLe, phi.inverse() + Scalar::fraction(1, 100)}};
  EXPECT_TRUE(find_feasible_point(1, cons).has_value());
  cons[1].rhs = phi.inverse() - Scalar::fraction(1, 100);
  EXPECT_FALSE(find_feasible_point(1, cons).has_value());
}

}  // namespace
}  // namespace coxcone
