#include "weilcert/linalg.hpp"

#include "weilcert/errors.hpp"

namespace weilcert {

Matrix identity_matrix(const FieldRef& field, std::size_t n) {
  Matrix m(n, std::vector<TowerElt>(n, TowerElt(field)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = TowerElt::one(field);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) throw DomainError("matrix shape mismatch");
  const FieldRef& f = a[0][0].field();
  Matrix r(a.size(), std::vector<TowerElt>(b[0].size(), TowerElt(f)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

TowerElt determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of empty matrix");
  const FieldRef f = m[0][0].field();
  TowerElt det = TowerElt::one(f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return TowerElt(f);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    TowerElt inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      TowerElt factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    TowerElt inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      TowerElt factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<TowerElt>> nullspace(Matrix m) {
  if (m.empty()) return {};
  const FieldRef f = m[0][0].field();
  const std::size_t cols = m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<TowerElt>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<TowerElt> v(cols, TowerElt(f));
    v[free] = TowerElt::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<TowerElt>> solve_linear(Matrix a, std::vector<TowerElt> b) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n || b.size() != n) throw DomainError("solve_linear needs a square system");
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  std::vector<TowerElt> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(a[i][n]);
  return x;
}

}  // namespace weilcert
