#include "coxcone/matrix.hpp"

#include <algorithm>
#include <cassert>

#include "coxcone/error.hpp"

namespace coxcone {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == m.cols_);
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::inverse() const {
  assert(rows_ == cols_);
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw DivisionByZero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Scalar pivot_inv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= pivot_inv;
      inv(c, j) *= pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Scalar f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  assert(x.cols_ == y.rows_);
  Matrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        if (!y(k, j).is_zero()) out(i, j) += xik * y(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  assert(m.cols_ == v.size());
  Vector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

Scalar dot(const Vector& u, const Vector& v) {
  assert(u.size() == v.size());
  Scalar s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
  }
  return s;
}

Vector add(const Vector& u, const Vector& v) {
  Vector out = u;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  return out;
}

Vector sub(const Vector& u, const Vector& v) {
  Vector out = u;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= v[i];
  return out;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= c;
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::size_t hash_vector(const Vector& v) {
  std::size_t h = v.size();
  for (const auto& x : v) h = h * 0x100000001b3ULL ^ x.hash();
  return h;
}

namespace {

// out = row - factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Scalar& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
      ++j;
    } else {
      Scalar v = row[i].second - factor * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEliminator::insert(SparseRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      const Scalar lead_inv = row.front().second.inverse();
      for (auto& e : row) e.second *= lead_inv;
      const std::size_t col = row.front().first;
      pivots_.emplace(col, std::move(row));
      return true;
    }
    const Scalar factor = row.front().second;
    row = axpy(row, factor, it->second);
  }
  return false;
}

std::size_t sparse_rank(std::size_t cols, const std::vector<SparseRow>& rows) {
  SparseEliminator elim(cols);
  for (const auto& r : rows) elim.insert(r);
  return elim.rank();
}

}  // namespace coxcone
