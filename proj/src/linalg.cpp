#include "charnum/linalg.hpp"

#include <stdexcept>

namespace charnum {

namespace {

// Row-reduces m in place, returning the pivot column of each pivot row.
std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rational inv = m[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int matrix_rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

Rational matrix_det(Matrix m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel == n) return Rational(0);
    if (sel != c) {
      std::swap(m[c], m[sel]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = m[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<Vector> solve_linear(Matrix a, Vector b) {
  std::size_t rows = a.size();
  if (rows != b.size()) throw std::invalid_argument("solve_linear size mismatch");
  if (rows == 0) return Vector{};
  std::size_t cols = a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = row_reduce(a);
  // Inconsistent if some pivot falls in the augmented column.
  for (int p : pivots)
    if (static_cast<std::size_t>(p) == cols) return std::nullopt;
  // Underdetermined if fewer pivots than unknowns.
  if (pivots.size() != cols) return std::nullopt;
  Vector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  // Rows beyond the pivots must be consistent (zero = zero after reduction).
  for (std::size_t r = pivots.size(); r < rows; ++r)
    if (!a[r][cols].is_zero()) return std::nullopt;
  return x;
}

std::optional<Matrix> matrix_inverse(Matrix m) {
  std::size_t n = m.size();
  for (auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("inverse of non-square matrix");
    row.resize(2 * n, Rational(0));
  }
  for (std::size_t i = 0; i < n; ++i) m[i][n + i] = Rational(1);
  std::vector<int> pivots = row_reduce(m);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  Matrix inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

Vector matrix_apply(const Matrix& m, const Vector& x) {
  Vector out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != x.size()) throw std::invalid_argument("matrix_apply size mismatch");
    Rational acc(0);
    for (std::size_t j = 0; j < x.size(); ++j) acc += row[j] * x[j];
    out.push_back(acc);
  }
  return out;
}

}  // namespace charnum
