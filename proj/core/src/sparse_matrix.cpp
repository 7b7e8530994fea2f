#include "loophh/sparse_matrix.hpp"

#include <algorithm>

#include "loophh/error.hpp"

namespace loophh {

namespace {

auto find_col(const SparseMatrix::Row& row, std::size_t c) {
  return std::lower_bound(row.begin(), row.end(), c,
                          [](const SparseMatrix::Entry& e, std::size_t col) { return e.first < col; });
}

auto find_col(SparseMatrix::Row& row, std::size_t c) {
  return std::lower_bound(row.begin(), row.end(), c,
                          [](const SparseMatrix::Entry& e, std::size_t col) { return e.first < col; });
}

}  // namespace

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) s.data_[r].emplace_back(c, m(r, c));
  return s;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  SparseMatrix s(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      if (!cols[c][r].is_zero()) s.data_[r].emplace_back(c, cols[c][r]);
  }
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s.data_[i].emplace_back(i, Scalar(1));
  return s;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar SparseMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = find_col(row, c);
  return it != row.end() && it->first == c ? it->second : Scalar();
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (c >= cols_) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
  auto& row = data_.at(r);
  auto it = find_col(row, c);
  if (it != row.end() && it->first == c) {
    if (v.is_zero()) {
      row.erase(it);
    } else {
      it->second = v;
    }
  } else if (!v.is_zero()) {
    row.insert(it, Entry{c, v});
  }
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  if (c >= cols_) throw Error(ErrorCode::DimensionMismatch, "column index out of range");
  auto& row = data_.at(r);
  if (row.empty() || row.back().first < c) {
    row.emplace_back(c, v);
    return;
  }
  auto it = find_col(row, c);
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, Entry{c, v});
  }
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : data_[r]) m(r, c) = v;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "sparse matrix-vector shape");
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, x] : data_[r])
      if (!v[c].is_zero()) out[r] += x * v[c];
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows()) throw Error(ErrorCode::DimensionMismatch, "sparse product shape");
  SparseMatrix out(a.rows(), b.cols_);
  std::vector<Scalar> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    cols.clear();
    for (const auto& [k, x] : a.data_[r]) {
      for (const auto& [c, y] : b.data_[k]) {
        if (!touched[c]) {
          touched[c] = 1;
          cols.push_back(c);
          acc[c] = x * y;
        } else {
          acc[c] += x * y;
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    for (std::size_t c : cols) {
      if (!acc[c].is_zero()) out.data_[r].emplace_back(c, acc[c]);
      touched[c] = 0;
    }
  }
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "sparse difference shape");
  SparseMatrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.data_[r]) out.add(r, c, -v);
  return out;
}

SparseMatrix operator*(const Scalar& s, const SparseMatrix& m) {
  if (s.is_zero()) return SparseMatrix(m.rows(), m.cols_);
  SparseMatrix out = m;
  for (auto& row : out.data_)
    for (auto& e : row) e.second *= s;
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto& ra = a.data_[r];
    const auto& rb = b.data_[r];
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i)
      if (ra[i].first != rb[i].first || !(ra[i].second == rb[i].second)) return false;
  }
  return true;
}

}  // namespace loophh
