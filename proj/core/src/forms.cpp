#include "loophh/forms.hpp"

#include <algorithm>
#include <set>

#include "loophh/error.hpp"

namespace loophh {

namespace {

const char* const kBar = "\xCC\x84";  // U+0304 combining macron

// Sorts idx in place; returns the permutation sign, or 0 if an index repeats.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

void check_same_space(const CoordinateSpace& a, const CoordinateSpace& b) {
  if (!(a == b)) throw Error(ErrorCode::SpaceMismatch, "forms live on different coordinate spaces");
}

void fill_tuples(std::size_t start, std::size_t n, int k, const std::vector<bool>& mask, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    if (!mask.empty() && !mask[i]) continue;
    cur.push_back(static_cast<int>(i));
    fill_tuples(i + 1, n, k, mask, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CoordinateSpace::CoordinateSpace(Kind kind, std::size_t rank, std::vector<std::string> names)
    : kind_(kind), rank_(rank), names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

CoordinateSpace CoordinateSpace::real(std::size_t d, std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  if (names.size() != d) throw Error(ErrorCode::DimensionMismatch, "variable name count");
  return CoordinateSpace(Kind::Real, d, std::move(names));
}

CoordinateSpace CoordinateSpace::complex_pairs(std::size_t m, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < m; ++i) labels.push_back("z" + std::to_string(i + 1));
  }
  if (labels.size() != m) throw Error(ErrorCode::DimensionMismatch, "pair label count");
  std::vector<std::string> names = labels;
  for (const auto& l : labels) {
    // z1 -> z̄1: the macron goes on the letter part.
    std::size_t cut = l.find_first_of("0123456789");
    if (cut == std::string::npos) cut = l.size();
    names.push_back(l.substr(0, cut) + kBar + l.substr(cut));
  }
  return CoordinateSpace(Kind::ComplexPairs, m, std::move(names));
}

std::size_t CoordinateSpace::conjugate(std::size_t i) const {
  if (kind_ == Kind::Real) return i;
  return i < rank_ ? i + rank_ : i - rank_;
}

bool operator==(const CoordinateSpace& a, const CoordinateSpace& b) {
  if (a.names_ == b.names_) return a.kind_ == b.kind_;
  return a.kind_ == b.kind_ && a.rank_ == b.rank_ && *a.names_ == *b.names_;
}

int form_degree(const FormKey& key) { return static_cast<int>(key.dx.size()); }
int internal_degree(const FormKey& key) { return total_degree(key.exps) + form_degree(key); }

PolyForm PolyForm::monomial(const CoordinateSpace& space, const Exponents& exps, std::vector<int> dx,
                            const Scalar& c) {
  PolyForm f(space);
  f.add_term(exps, dx, c);
  return f;
}

PolyForm PolyForm::constant(const CoordinateSpace& space, const Scalar& c) {
  return monomial(space, Exponents(space.num_vars(), 0), {}, c);
}

PolyForm PolyForm::variable(const CoordinateSpace& space, std::size_t i) {
  Exponents e(space.num_vars(), 0);
  e.at(i) = 1;
  return monomial(space, e, {});
}

PolyForm PolyForm::differential(const CoordinateSpace& space, std::size_t i) {
  if (i >= space.num_vars()) throw Error(ErrorCode::DimensionMismatch, "differential index out of range");
  return monomial(space, Exponents(space.num_vars(), 0), {static_cast<int>(i)});
}

PolyForm PolyForm::function(const CoordinateSpace& space, const Polynomial& p) {
  if (p.nvars() != space.num_vars()) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count");
  PolyForm f(space);
  for (const auto& [e, c] : p.terms()) f.add_key(FormKey{e, {}}, c);
  return f;
}

Scalar PolyForm::coefficient(const FormKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void PolyForm::add_term(const Exponents& exps, const std::vector<int>& idx, const Scalar& c) {
  if (c.is_zero()) return;
  std::vector<int> sorted = idx;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return;
  add_key(FormKey{exps, std::move(sorted)}, sign > 0 ? c : -c);
}

void PolyForm::add_key(const FormKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  if (key.exps.size() != space_.num_vars()) throw Error(ErrorCode::DimensionMismatch, "monomial has wrong variable count");
  for (int i : key.dx)
    if (i < 0 || static_cast<std::size_t>(i) >= space_.num_vars())
      throw Error(ErrorCode::DimensionMismatch, "differential index out of range");
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<std::pair<int, int>> PolyForm::degree_support() const {
  std::set<std::pair<int, int>> s;
  for (const auto& [key, c] : terms_) s.emplace(form_degree(key), internal_degree(key));
  return {s.begin(), s.end()};
}

PolyForm& PolyForm::operator+=(const PolyForm& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero() && terms_.empty() && space_.num_vars() == 0) space_ = rhs.space_;
  check_same_space(space_, rhs.space_);
  for (const auto& [k, c] : rhs.terms_) add_key(k, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero() && terms_.empty() && space_.num_vars() == 0) space_ = rhs.space_;
  check_same_space(space_, rhs.space_);
  for (const auto& [k, c] : rhs.terms_) add_key(k, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

PolyForm PolyForm::operator-() const {
  PolyForm out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

PolyVectorField PolyVectorField::linear(const CoordinateSpace& space, const Matrix& a) {
  const std::size_t n = space.num_vars();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::DimensionMismatch, "vector field matrix size");
  PolyVectorField y{space, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
    y.components.push_back(Polynomial::linear(row));
  }
  return y;
}

PolyVectorField PolyVectorField::twisted(const CoordinateSpace& space, const Matrix& h) {
  const Matrix g = variable_matrix(space, h);
  return linear(space, Matrix::identity(g.rows()) - g);
}

PolyVectorField PolyVectorField::diagonal(const CoordinateSpace& space, const Vector& c) {
  if (c.size() != space.num_vars()) throw Error(ErrorCode::DimensionMismatch, "diagonal field size");
  return linear(space, Matrix::diagonal(c));
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
  Polynomial out(space.num_vars());
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].is_zero()) continue;
    out += components[i] * f.derivative(i);
  }
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  check_same_space(a.space(), b.space());
  PolyForm out(a.space());
  Exponents e(a.space().num_vars());
  std::vector<int> idx;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ka.exps[i] + kb.exps[i];
      idx = ka.dx;
      idx.insert(idx.end(), kb.dx.begin(), kb.dx.end());
      out.add_term(e, idx, ca * cb);
    }
  return out;
}

PolyForm d_rel(const PolyForm& a, const std::vector<bool>& mask) {
  PolyForm out(a.space());
  const std::size_t n = a.space().num_vars();
  std::vector<int> idx;
  for (const auto& [k, c] : a.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (k.exps[i] == 0 || (!mask.empty() && !mask[i])) continue;
      Exponents e = k.exps;
      --e[i];
      idx.assign(1, static_cast<int>(i));
      idx.insert(idx.end(), k.dx.begin(), k.dx.end());
      out.add_term(e, idx, c * Scalar(k.exps[i]));
    }
  }
  return out;
}

PolyForm contract(const PolyVectorField& y, const PolyForm& a) {
  check_same_space(y.space, a.space());
  PolyForm out(a.space());
  const std::size_t n = a.space().num_vars();
  for (const auto& [k, c] : a.terms()) {
    for (std::size_t r = 0; r < k.dx.size(); ++r) {
      const Polynomial& comp = y.components[static_cast<std::size_t>(k.dx[r])];
      if (comp.is_zero()) continue;
      std::vector<int> rest = k.dx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
      const Scalar cr = r % 2 == 0 ? c : -c;
      for (const auto& [f, d] : comp.terms()) {
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = k.exps[i] + f[i];
        out.add_key(FormKey{std::move(e), rest}, cr * d);
      }
    }
  }
  return out;
}

Matrix variable_matrix(const CoordinateSpace& space, const Matrix& g) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "group element must be square");
  if (g.rows() == space.num_vars()) return g;
  if (space.is_complex() && g.rows() == space.rank()) return block_diagonal({g, g.conj()});
  throw Error(ErrorCode::DimensionMismatch, "matrix size does not match the coordinate space");
}

PolyForm pullback_linear(const Matrix& b, const PolyForm& a, const CoordinateSpace& target) {
  const std::size_t n = a.space().num_vars();
  const std::size_t t = target.num_vars();
  if (b.rows() != n || b.cols() != t) throw Error(ErrorCode::DimensionMismatch, "pullback matrix shape");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(t);
    for (std::size_t j = 0; j < t; ++j) row[j] = b(i, j);
    images.push_back(Polynomial::linear(row));
  }
  PolyForm out(target);
  for (const auto& [k, c] : a.terms()) {
    Polynomial coeff = Polynomial::monomial(k.exps, c).substitute(images);
    if (coeff.is_zero()) continue;
    // Expand dx_{i1} ∧ ... ∧ dx_{ik} into target differentials.
    std::map<std::vector<int>, Scalar> diff;
    diff.emplace(std::vector<int>{}, Scalar(1));
    for (int i : k.dx) {
      std::map<std::vector<int>, Scalar> next;
      for (const auto& [idx, v] : diff) {
        for (std::size_t j = 0; j < t; ++j) {
          const Scalar& bij = b(static_cast<std::size_t>(i), j);
          if (bij.is_zero()) continue;
          if (std::find(idx.begin(), idx.end(), static_cast<int>(j)) != idx.end()) continue;
          std::vector<int> ext = idx;
          ext.push_back(static_cast<int>(j));
          int sign = sort_with_sign(ext);
          Scalar add = sign > 0 ? v * bij : -(v * bij);
          auto [it, inserted] = next.try_emplace(ext, add);
          if (!inserted) it->second += add;
        }
      }
      diff = std::move(next);
    }
    for (const auto& [idx, v] : diff) {
      if (v.is_zero()) continue;
      for (const auto& [e, pc] : coeff.terms()) out.add_key(FormKey{e, idx}, pc * v);
    }
  }
  return out;
}

PolyForm pullback(const Matrix& g, const PolyForm& a) {
  const Matrix full = variable_matrix(a.space(), g);
  return pullback_linear(full, a, a.space());
}

std::vector<std::vector<int>> index_tuples(std::size_t n, int k, const std::vector<bool>& mask) {
  std::vector<std::vector<int>> out;
  if (k < 0 || static_cast<std::size_t>(k) > n) return out;
  std::vector<int> cur;
  fill_tuples(0, n, k, mask, cur, out);
  return out;
}

GradedPiece::GradedPiece(const CoordinateSpace& space, int k, int n, const std::vector<bool>& poly_mask,
                         const std::vector<bool>& form_mask)
    : space_(space), k_(k), n_(n) {
  const std::size_t nv = space.num_vars();
  if (k < 0 || n < k) return;
  const auto monos = monomials_of_degree(nv, n - k, poly_mask);
  for (auto& tuple : index_tuples(nv, k, form_mask)) {
    for (const auto& e : monos) {
      index_.emplace(FormKey{e, tuple}, keys_.size());
      keys_.push_back(FormKey{e, tuple});
    }
  }
}

PolyForm GradedPiece::element(std::size_t i) const {
  PolyForm f(space_);
  f.add_key(keys_.at(i), Scalar(1));
  return f;
}

std::ptrdiff_t GradedPiece::index_of(const FormKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

Vector GradedPiece::coordinates(const PolyForm& a) const {
  Vector v(keys_.size());
  for (const auto& [k, c] : a.terms()) {
    auto i = index_of(k);
    if (i < 0) throw Error(ErrorCode::DimensionMismatch, "form has terms outside the graded piece");
    v[static_cast<std::size_t>(i)] = c;
  }
  return v;
}

PolyForm GradedPiece::combination(const Vector& coords) const {
  if (coords.size() != keys_.size()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  PolyForm f(space_);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add_key(keys_[i], coords[i]);
  return f;
}

std::vector<PolyForm> graded_basis(const CoordinateSpace& space, int k, int n) {
  GradedPiece piece(space, k, n);
  std::vector<PolyForm> out;
  out.reserve(piece.size());
  for (std::size_t i = 0; i < piece.size(); ++i) out.push_back(piece.element(i));
  return out;
}

SparseMatrix operator_matrix(const GradedPiece& src, const GradedPiece& dst,
                             const std::function<PolyForm(const PolyForm&)>& op) {
  SparseMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    PolyForm img = op(src.element(c));
    for (const auto& [k, v] : img.terms()) {
      auto r = dst.index_of(k);
      if (r < 0) throw Error(ErrorCode::DimensionMismatch, "operator image leaves the target piece");
      m.set(static_cast<std::size_t>(r), c, v);
    }
  }
  return m;
}

}  // namespace loophh
