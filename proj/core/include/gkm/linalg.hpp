#ifndef GKM_LINALG_HPP
#define GKM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

using QVector = std::vector<Rational>;
using QRowList = std::vector<QVector>;

// Reduced row echelon form over the rationals. The result is the unique
// RREF of the row space: zero rows dropped, pivots scaled to 1, pivot
// columns cleared above and below. Pivot selection prefers the candidate
// with the largest absolute numerator; the outcome does not depend on the
// choice, only the intermediate arithmetic does.
struct Rref {
  QRowList rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return rows.size(); }
};

Rref reduced_row_echelon(QRowList rows, std::size_t cols);

std::size_t rank_of(QRowList rows, std::size_t cols);

// Canonical basis of the null space {x : A x = 0}, returned as the RREF
// rows of the standard free-variable kernel vectors.
QRowList kernel_basis(const QRowList& rows, std::size_t cols);

// Subtracts the projection of v onto the RREF row space; the residual is
// zero iff v lies in the span.
QVector reduce_against(const Rref& rref, QVector v);

}  // namespace gkm

#endif  // GKM_LINALG_HPP
