#include "gause/linsolve.hpp"

#include <stdexcept>

namespace gause {

namespace {

mpz_class pivot_weight(const QGauss& z) {
  mpz_class re = abs(z.re().get_num());
  mpz_class im = abs(z.im().get_num());
  return re > im ? re : im;
}

/// Reduces the augmented matrix [A | b] in place to reduced row echelon form;
/// returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    mpz_class best_weight;
    for (std::size_t i = row; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      mpz_class w = pivot_weight(m(i, col));
      if (best == m.rows() || w > best_weight) {
        best = i;
        best_weight = std::move(w);
      }
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
    const QGauss inv = QGauss(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const QGauss factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<QGauss> Matrix::operator*(const std::vector<QGauss>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix*vector: dimension mismatch");
  std::vector<QGauss> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

SolutionSet linear_solve_exact(const Matrix& A, const std::vector<QGauss>& b) {
  if (b.size() != A.rows())
    throw std::invalid_argument("linear_solve_exact: right-hand side has " +
                                std::to_string(b.size()) + " entries, matrix has " +
                                std::to_string(A.rows()) + " rows");
  const std::size_t n = A.cols();
  Matrix m(A.rows(), n + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = A(i, j);
    m(i, n) = b[i];
  }
  const auto pivots = rref(m, n);

  SolutionSet out;
  out.rank = pivots.size();
  for (std::size_t i = pivots.size(); i < m.rows(); ++i)
    if (!m(i, n).is_zero()) return out;
  out.consistent = true;

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  out.particular.assign(n, QGauss());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = m(r, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<QGauss> v(n);
    v[f] = QGauss(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& A) {
  Matrix m = A;
  return rref(m, m.cols()).size();
}

}  // namespace gause
