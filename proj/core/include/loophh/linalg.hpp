#pragma once

#include <cstddef>
#include <vector>

#include "loophh/matrix.hpp"
#include "loophh/sparse_matrix.hpp"

namespace loophh {

struct EliminationOptions {
  /// Matrices with at most this many columns are reduced with dense Bareiss elimination.
  std::size_t dense_threshold = 64;
};

/// Reduced row echelon form: pivot entries are 1 and pivot columns are otherwise zero.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseMatrix::Row> rows;  // one per pivot, ordered by pivot column
  std::vector<std::size_t> pivots;
};

/// Row echelon form by fraction-free elimination, before normalisation.
/// The pivot row for each column is the lowest-index remaining row with a nonzero there.
Echelon row_echelon(const SparseMatrix& m, const EliminationOptions& opts = {});
Echelon reduced_echelon(const SparseMatrix& m, const EliminationOptions& opts = {});

std::size_t rank(const SparseMatrix& m, const EliminationOptions& opts = {});
std::size_t rank(const Matrix& m, const EliminationOptions& opts = {});

/// Right kernel basis. One vector per free column f, with v[f] = 1 and zero on other free columns.
std::vector<Vector> kernel_basis(const SparseMatrix& m, const EliminationOptions& opts = {});
std::vector<Vector> kernel_basis(const Matrix& m, const EliminationOptions& opts = {});

/// Dimension of the span of equal-length vectors.
std::size_t rank_of_vectors(const std::vector<Vector>& vs, std::size_t length);

/// dim span(A) - dim span(B); throws NotASubspace unless span(B) lies in span(A).
std::size_t quotient_dim(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t length);

/// Coordinates of `v` in the linearly independent family `basis`; throws NotASubspace if v is outside the span.
Vector coordinates_in_basis(const std::vector<Vector>& basis, const Vector& v);

/// Inverse of a square matrix; throws DivisionByZero if singular.
Matrix inverse(const Matrix& m);

}  // namespace loophh
