#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "m0n/exactla/rational.hpp"

namespace m0n {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("row length does not match column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  RatMatrix reduced;
  std::vector<std::size_t> basis_columns;  // pivot columns, ascending
};

/// Reduced row-echelon form by Gauss-Jordan elimination over Q.
inline RrefResult rref(RatMatrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && sgn(m(r, c)) == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));
    Rational inv = 1 / m(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(pivot_row, j)) != 0) m(pivot_row, j) *= inv;
    // Collect the nonzero pattern of the pivot row once; relation matrices are sparse.
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(pivot_row, j)) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(pivot_row, j);
    }
    out.basis_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  out.reduced = std::move(m);
  return out;
}

/// Exact solution set of A x = b.
struct LinearSolution {
  bool consistent = false;
  RatVector particular;             // one solution when consistent
  std::vector<RatVector> kernel;    // basis of the null space of A
};

inline LinearSolution solve_linear(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw ShapeError("right-hand side length does not match row count");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  LinearSolution sol;
  if (!r.basis_columns.empty() && r.basis_columns.back() == a.cols()) return sol;
  sol.consistent = true;
  sol.particular.assign(a.cols(), Rational(0));
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t k = 0; k < r.rank; ++k) {
    std::size_t c = r.basis_columns[k];
    is_pivot[c] = true;
    sol.particular[c] = r.reduced(k, a.cols());
  }
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) v[r.basis_columns[k]] = -r.reduced(k, free);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

inline RatVector multiply(const RatMatrix& a, const RatVector& x) {
  if (x.size() != a.cols()) throw ShapeError("vector length does not match column count");
  RatVector y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) y[i] += a(i, j) * x[j];
  return y;
}

}  // namespace m0n
