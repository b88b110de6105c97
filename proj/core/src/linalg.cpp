#include "bellcone/linalg.hpp"

#include <stdexcept>

namespace bellcone {

std::vector<Integer> to_integer_row(const Vector& row) {
  Integer l = 1;
  for (const auto& x : row) {
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
  }
  std::vector<Integer> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero()) out[i] = row[i].raw().get_num() * (l / row[i].raw().get_den());
  }
  return out;
}

std::size_t bareiss_rank(IntegerMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows; ++c) {
    std::size_t pivot = k;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[k][c] * a[i][j] - a[i][c] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[k][c];
    ++k;
  }
  return k;
}

std::size_t rank(const Matrix& rows) {
  IntegerMatrix a;
  a.reserve(rows.size());
  for (const auto& r : rows) a.push_back(to_integer_row(r));
  return bareiss_rank(std::move(a));
}

std::vector<std::size_t> rref(Matrix& m, std::size_t dim) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    const std::size_t width = m[r].size();
    for (std::size_t j = c; j < width; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < width; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> independent_rows(const Matrix& rows, std::size_t dim) {
  // Incremental echelon basis; a row is kept if it is not reduced to zero.
  std::vector<std::size_t> kept;
  Matrix basis;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    if (kept.size() == dim) break;
    Vector v = rows[idx];
    if (v.size() != dim) throw std::invalid_argument("independent_rows: dimension mismatch");
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto c = pivot_cols[b];
      if (v[c].is_zero()) continue;
      const Rational f = v[c];
      for (std::size_t j = 0; j < dim; ++j) {
        if (!basis[b][j].is_zero()) v[j] -= f * basis[b][j];
      }
    }
    std::size_t c = 0;
    while (c < dim && v[c].is_zero()) ++c;
    if (c == dim) continue;
    const Rational inv = Rational(1) / v[c];
    for (auto& x : v) x *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b][c].is_zero()) continue;
      const Rational f = basis[b][c];
      for (std::size_t j = 0; j < dim; ++j) {
        if (!v[j].is_zero()) basis[b][j] -= f * v[j];
      }
    }
    basis.push_back(std::move(v));
    pivot_cols.push_back(c);
    kept.push_back(idx);
  }
  return kept;
}

Matrix nullspace(const Matrix& rows, std::size_t dim) {
  Matrix m = rows;
  for (const auto& r : m) {
    if (r.size() != dim) throw std::invalid_argument("nullspace: dimension mismatch");
  }
  const auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vector v(dim);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(canonical_line(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() != n) throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

}  // namespace bellcone
