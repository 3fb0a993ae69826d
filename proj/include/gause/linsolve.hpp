#pragma once

#include <cstddef>
#include <vector>

#include "gause/scalar.hpp"

namespace gause {

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QGauss& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const QGauss& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<QGauss> operator*(const std::vector<QGauss>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QGauss> a_;
};

/// Affine solution set of A u = b: particular + span(nullspace).
struct SolutionSet {
  bool consistent = false;
  std::vector<QGauss> particular;
  std::vector<std::vector<QGauss>> nullspace;
  std::size_t rank = 0;

  bool empty() const { return !consistent; }
  bool unique() const { return consistent && nullspace.empty(); }
};

/// Exact Gauss-Jordan elimination. The pivot in each column is the entry with
/// the largest numerator, which keeps intermediate fractions small on the
/// systems built here. Throws std::invalid_argument when b.size() != A.rows().
SolutionSet linear_solve_exact(const Matrix& A, const std::vector<QGauss>& b);

std::size_t rank(const Matrix& A);

}  // namespace gause
