#include "gkm/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gkm {

namespace {

bool abs_numerator_less(const Rational& a, const Rational& b) {
  return cmp(abs(a.get_num()), abs(b.get_num())) < 0;
}

}  // namespace

Rref reduced_row_echelon(QRowList rows, std::size_t cols) {
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  Rref result;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (best == rows.size() || abs_numerator_less(rows[best][col], rows[i][col])) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    const Rational inv = 1 / rows[next][col];
    for (std::size_t j = col; j < cols; ++j) rows[next][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[next][j];
    }
    result.pivot_cols.push_back(col);
    ++next;
  }
  rows.resize(next);
  result.rows = std::move(rows);
  return result;
}

std::size_t rank_of(QRowList rows, std::size_t cols) {
  return reduced_row_echelon(std::move(rows), cols).rank();
}

QRowList kernel_basis(const QRowList& rows, std::size_t cols) {
  const Rref rref = reduced_row_echelon(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : rref.pivot_cols) is_pivot[p] = true;

  QRowList kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t j = 0; j < rref.pivot_cols.size(); ++j) {
      v[rref.pivot_cols[j]] = -rref.rows[j][f];
    }
    kernel.push_back(std::move(v));
  }
  return reduced_row_echelon(std::move(kernel), cols).rows;
}

QVector reduce_against(const Rref& rref, QVector v) {
  for (std::size_t j = 0; j < rref.pivot_cols.size(); ++j) {
    const Rational factor = v[rref.pivot_cols[j]];
    if (factor == 0) continue;
    for (std::size_t col = 0; col < v.size(); ++col) {
      v[col] -= factor * rref.rows[j][col];
    }
  }
  return v;
}

}  // namespace gkm
