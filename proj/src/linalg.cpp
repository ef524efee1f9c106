#include "posetform/linalg.hpp"

namespace posetform {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> echelon(RatMat& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rat inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinSolveResult solve(const RatMat& m, const RatVec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch();
  const std::size_t n = m.cols();
  RatMat aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = echelon(aug);

  LinSolveResult res;
  bool consistent = !(pivots.size() && pivots.back() == n);
  if (pivots.size() && pivots.back() == n) pivots.pop_back();

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  // Nullspace of M from the same echelon form (last column ignored).
  for (std::size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    RatVec v(n);
    v[freec] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, freec);
    res.nullspace.push_back(std::move(v));
  }

  if (consistent) {
    RatVec x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    res.particular = std::move(x);
  }
  return res;
}

std::vector<RatVec> left_nullspace(const RatMat& m) {
  RatMat t = m.transposed();
  return solve(t, RatVec(t.rows())).nullspace;
}

Rat determinant(const RatMat& m) {
  if (!m.is_square()) throw NotSquare();
  RatMat a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    Rat inv = 1 / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RatMat inverse(const RatMat& m) {
  if (!m.is_square()) throw NotSquare();
  const std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw SingularMatrix();
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(const RatMat& m) {
  RatMat a = m;
  return echelon(a).size();
}

}  // namespace posetform
