#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "coxcone/scalar.hpp"

namespace coxcone {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  Matrix transpose() const;
  Matrix inverse() const;  // throws DivisionByZero if singular

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  std::span<const Scalar> entries() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Euclidean dot product of coordinate vectors (no Gram form).
Scalar dot(const Vector& u, const Vector& v);
Vector add(const Vector& u, const Vector& v);
Vector sub(const Vector& u, const Vector& v);
Vector scale(const Scalar& c, const Vector& v);
bool is_zero(const Vector& v);

std::size_t hash_vector(const Vector& v);

struct VectorHash {
  std::size_t operator()(const Vector& v) const { return hash_vector(v); }
};

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// Incremental exact row reduction for sparse rows. Rows are kept fully
// reduced against each other's pivots only on insertion, which keeps fill-in
// low for the short wall relations this is used on.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t cols) : cols_(cols) {}

  // Returns true if the row was independent of the rows seen so far.
  bool insert(SparseRow row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t nullity() const { return cols_ - pivots_.size(); }

 private:
  std::size_t cols_;
  // pivot column -> row normalized to 1 at that column
  std::map<std::size_t, SparseRow> pivots_;
};

// Rank of a set of sparse rows in `cols` unknowns.
std::size_t sparse_rank(std::size_t cols, const std::vector<SparseRow>& rows);

}  // namespace coxcone
