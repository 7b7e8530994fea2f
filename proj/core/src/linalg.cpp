#include "loophh/linalg.hpp"

#include <algorithm>
#include <map>

#include "loophh/error.hpp"

namespace loophh {

namespace {

using Row = SparseMatrix::Row;

// Clears denominators and the integer content of a row, keeping it in the same line.
void make_primitive(Row& row) {
  if (row.empty()) return;
  mpz_class den = 1;
  for (const auto& e : row) {
    mpz_class d = e.second.denominator_lcm();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  if (den != 1) {
    const Scalar f{mpq_class(den)};
    for (auto& e : row) e.second *= f;
  }
  mpz_class g = 0;
  for (const auto& e : row) {
    mpz_class n = e.second.numerator_gcd();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    const Scalar f{mpq_class(mpz_class(1), g)};
    for (auto& e : row) e.second *= f;
  }
}

// a * x - b * y, merged by column, zeros dropped.
Row combine(const Scalar& a, const Row& x, const Scalar& b, const Row& y) {
  Row out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      Scalar v = a * x[i].second - b * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Echelon sparse_echelon(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows());
  std::map<std::size_t, std::vector<std::size_t>> buckets;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r] = m.row(r);
    if (rows[r].empty()) continue;
    make_primitive(rows[r]);
    buckets[rows[r].front().first].push_back(r);
  }
  Echelon out;
  out.cols = m.cols();
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    std::size_t col = node.key();
    auto& members = node.mapped();
    auto best = std::min_element(members.begin(), members.end());
    std::size_t p = *best;
    members.erase(best);
    const Row& prow = rows[p];
    const Scalar& plead = prow.front().second;
    for (std::size_t r : members) {
      Row next = combine(plead, rows[r], rows[r].front().second, prow);
      if (next.empty()) {
        rows[r].clear();
        continue;
      }
      make_primitive(next);
      rows[r] = std::move(next);
      buckets[rows[r].front().first].push_back(r);
    }
    out.pivots.push_back(col);
    out.rows.push_back(std::move(rows[p]));
  }
  return out;
}

Echelon dense_echelon(const SparseMatrix& sm) {
  Matrix a = sm.to_dense();
  const std::size_t nr = a.rows(), nc = a.cols();
  std::vector<std::size_t> order(nr);
  for (std::size_t i = 0; i < nr; ++i) order[i] = i;
  Echelon out;
  out.cols = nc;
  Scalar prev(1);
  std::size_t k = 0;
  for (std::size_t c = 0; c < nc && k < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t i = k; i < nr; ++i) {
      if (!a(order[i], c).is_zero() && (piv == nr || order[i] < order[piv])) piv = i;
    }
    if (piv == nr) continue;
    std::swap(order[k], order[piv]);
    const std::size_t pr = order[k];
    for (std::size_t i = k + 1; i < nr; ++i) {
      const std::size_t r = order[i];
      for (std::size_t j = c + 1; j < nc; ++j) {
        Scalar v = a(pr, c) * a(r, j) - a(r, c) * a(pr, j);
        a(r, j) = prev.is_one() ? std::move(v) : v / prev;
      }
      a(r, c) = Scalar();
    }
    prev = a(pr, c);
    out.pivots.push_back(c);
    Row row;
    for (std::size_t j = c; j < nc; ++j)
      if (!a(pr, j).is_zero()) row.emplace_back(j, a(pr, j));
    out.rows.push_back(std::move(row));
    ++k;
  }
  return out;
}

Scalar entry_at(const Row& row, std::size_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseMatrix::Entry& e, std::size_t col) { return e.first < col; });
  return it != row.end() && it->first == c ? it->second : Scalar();
}

SparseMatrix from_vectors_as_rows(const std::vector<Vector>& vs, std::size_t length) {
  SparseMatrix m(vs.size(), length);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    if (vs[r].size() != length) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
    for (std::size_t c = 0; c < length; ++c)
      if (!vs[r][c].is_zero()) m.set(r, c, vs[r][c]);
  }
  return m;
}

}  // namespace

Echelon row_echelon(const SparseMatrix& m, const EliminationOptions& opts) {
  if (m.cols() <= opts.dense_threshold) return dense_echelon(m);
  return sparse_echelon(m);
}

Echelon reduced_echelon(const SparseMatrix& m, const EliminationOptions& opts) {
  Echelon e = row_echelon(m, opts);
  for (std::size_t r = e.rows.size(); r-- > 0;) {
    Row& row = e.rows[r];
    Scalar inv = row.front().second.inverse();
    for (auto& x : row) x.second *= inv;
    const std::size_t pc = e.pivots[r];
    for (std::size_t q = 0; q < r; ++q) {
      Scalar f = entry_at(e.rows[q], pc);
      if (f.is_zero()) continue;
      e.rows[q] = combine(Scalar(1), e.rows[q], f, row);
    }
  }
  return e;
}

std::size_t rank(const SparseMatrix& m, const EliminationOptions& opts) {
  return row_echelon(m, opts).pivots.size();
}

std::size_t rank(const Matrix& m, const EliminationOptions& opts) {
  return rank(SparseMatrix::from_dense(m), opts);
}

std::vector<Vector> kernel_basis(const SparseMatrix& m, const EliminationOptions& opts) {
  Echelon e = reduced_echelon(m, opts);
  std::vector<std::ptrdiff_t> free_index(m.cols(), -1);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = static_cast<std::ptrdiff_t>(basis.size());
    Vector v(m.cols());
    v[c] = Scalar(1);
    basis.push_back(std::move(v));
  }
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    for (const auto& [c, x] : e.rows[r]) {
      if (free_index[c] >= 0) basis[static_cast<std::size_t>(free_index[c])][e.pivots[r]] = -x;
    }
  }
  return basis;
}

std::vector<Vector> kernel_basis(const Matrix& m, const EliminationOptions& opts) {
  return kernel_basis(SparseMatrix::from_dense(m), opts);
}

std::size_t rank_of_vectors(const std::vector<Vector>& vs, std::size_t length) {
  if (vs.empty()) return 0;
  return rank(from_vectors_as_rows(vs, length));
}

std::size_t quotient_dim(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t length) {
  const std::size_t ra = rank_of_vectors(a, length);
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  if (rank_of_vectors(both, length) != ra) {
    throw Error(ErrorCode::NotASubspace, "second family is not contained in the span of the first");
  }
  return ra - rank_of_vectors(b, length);
}

Vector coordinates_in_basis(const std::vector<Vector>& basis, const Vector& v) {
  const std::size_t k = basis.size();
  std::vector<Vector> cols = basis;
  cols.push_back(v);
  Echelon e = reduced_echelon(SparseMatrix::from_columns(v.size(), cols));
  Vector coords(k);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == k) throw Error(ErrorCode::NotASubspace, "vector is outside the span of the basis");
    coords[e.pivots[r]] = entry_at(e.rows[r], k);
  }
  if (e.pivots.size() != k) {
    throw Error(ErrorCode::DimensionMismatch, "basis vectors are linearly dependent");
  }
  return coords;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  SparseMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m(r, c));
    aug.set(r, n + r, Scalar(1));
  }
  Echelon e = reduced_echelon(aug);
  if (n > 0 && (e.pivots.size() < n || e.pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::DivisionByZero, "matrix is singular");
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, x] : e.rows[r])
      if (c >= n) out(r, c - n) = x;
  return out;
}

}  // namespace loophh
