#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "loophh/scalar.hpp"

namespace loophh {

using Vector = std::vector<Scalar>;

/// Small dense matrix over Scalar; used for group elements and linear maps.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& entries);
  static Matrix from_rows(const std::vector<Vector>& rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix conj_transpose() const;

  bool is_identity() const;
  bool is_diagonal() const;
  /// Lcm of the cyclotomic orders of all entries.
  int common_order() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector operator*(const Matrix& m, const Vector& v);

/// Block diagonal matrix diag(blocks...).
Matrix block_diagonal(const std::vector<Matrix>& blocks);

}  // namespace loophh
