#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "loophh/matrix.hpp"

namespace loophh {

/// Row-compressed sparse matrix. Each row is sorted by column and stores no zeros.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Scalar>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<Vector>& cols);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  const Row& row(std::size_t r) const { return data_[r]; }
  Scalar get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add(std::size_t r, std::size_t c, const Scalar& v);

  Matrix to_dense() const;
  SparseMatrix transpose() const;
  Vector apply(const Vector& v) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Scalar& s, const SparseMatrix& m);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

}  // namespace loophh
