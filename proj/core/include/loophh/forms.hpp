#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "loophh/matrix.hpp"
#include "loophh/polynomial.hpp"
#include "loophh/sparse_matrix.hpp"

namespace loophh {

/// Real coordinates x1..xd, or m complex pairs z1..zm, z̄1..z̄m treated as 2m independent variables.
class CoordinateSpace {
 public:
  enum class Kind { Real, ComplexPairs };

  CoordinateSpace() : CoordinateSpace(Kind::Real, 0, {}) {}
  static CoordinateSpace real(std::size_t d, std::vector<std::string> names = {});
  /// `labels` renames the pairs: label "w" gives variables w, w̄ instead of z1, z̄1.
  static CoordinateSpace complex_pairs(std::size_t m, std::vector<std::string> labels = {});

  Kind kind() const { return kind_; }
  bool is_complex() const { return kind_ == Kind::ComplexPairs; }
  std::size_t num_vars() const { return names_->size(); }
  /// Real dimension count d, or the number of pairs m.
  std::size_t rank() const { return rank_; }
  /// Index of the conjugate variable (identity for real spaces).
  std::size_t conjugate(std::size_t i) const;

  const std::string& variable_name(std::size_t i) const { return (*names_)[i]; }
  std::string differential_name(std::size_t i) const { return "d" + (*names_)[i]; }
  const std::vector<std::string>& variable_names() const { return *names_; }

  friend bool operator==(const CoordinateSpace& a, const CoordinateSpace& b);

 private:
  CoordinateSpace(Kind kind, std::size_t rank, std::vector<std::string> names);

  Kind kind_;
  std::size_t rank_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Basis key of a monomial form x^exps dx_{dx[0]} ∧ dx_{dx[1]} ∧ ... with strictly increasing dx.
struct FormKey {
  Exponents exps;
  std::vector<int> dx;
  auto operator<=>(const FormKey&) const = default;
  bool operator==(const FormKey&) const = default;
};

int form_degree(const FormKey& key);
int internal_degree(const FormKey& key);

class PolyForm {
 public:
  PolyForm() = default;
  explicit PolyForm(CoordinateSpace space) : space_(std::move(space)) {}

  static PolyForm monomial(const CoordinateSpace& space, const Exponents& exps, std::vector<int> dx,
                           const Scalar& c = Scalar(1));
  static PolyForm constant(const CoordinateSpace& space, const Scalar& c);
  static PolyForm variable(const CoordinateSpace& space, std::size_t i);
  static PolyForm differential(const CoordinateSpace& space, std::size_t i);
  static PolyForm function(const CoordinateSpace& space, const Polynomial& p);

  const CoordinateSpace& space() const { return space_; }
  const std::map<FormKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const FormKey& key) const;

  /// Adds c * x^exps dx_{idx}; idx may be unsorted (sign applied) or repeated (no-op).
  void add_term(const Exponents& exps, const std::vector<int>& idx, const Scalar& c);
  void add_key(const FormKey& key, const Scalar& c);

  /// Set of (form degree, internal degree) pairs carrying nonzero terms.
  std::vector<std::pair<int, int>> degree_support() const;
  bool is_homogeneous() const { return degree_support().size() <= 1; }

  PolyForm& operator+=(const PolyForm& rhs);
  PolyForm& operator-=(const PolyForm& rhs);
  PolyForm& operator*=(const Scalar& s);
  PolyForm operator-() const;
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Scalar& s, PolyForm a) { return a *= s; }
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  CoordinateSpace space_;
  std::map<FormKey, Scalar> terms_;
};

struct PolyVectorField {
  CoordinateSpace space;
  std::vector<Polynomial> components;

  /// Y_i = sum_j a(i, j) x_j.
  static PolyVectorField linear(const CoordinateSpace& space, const Matrix& a);
  /// Y_h(v) = v - h v.
  static PolyVectorField twisted(const CoordinateSpace& space, const Matrix& h);
  /// Y = sum_i c_i x_i d/dx_i.
  static PolyVectorField diagonal(const CoordinateSpace& space, const Vector& c);

  /// Derivation Y(f) = sum_i Y_i df/dx_i.
  Polynomial apply(const Polynomial& f) const;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
/// Exterior derivative; with a non-empty mask only the selected variables are differentiated.
PolyForm d_rel(const PolyForm& a, const std::vector<bool>& mask = {});
PolyForm contract(const PolyVectorField& y, const PolyForm& a);

/// Full substitution matrix on all variables for a group element: square of size num_vars,
/// or for complex spaces an m x m matrix expanded to diag(g, conj(g)).
Matrix variable_matrix(const CoordinateSpace& space, const Matrix& g);

/// (g* a)(x) = a(g x); dx_i -> sum_j g_ij dx_j.
PolyForm pullback(const Matrix& g, const PolyForm& a);
/// Pullback along the linear map y -> B y from `target` (B is num_vars(source) x num_vars(target)).
PolyForm pullback_linear(const Matrix& b, const PolyForm& a, const CoordinateSpace& target);

/// Ordered monomial-form basis of the (k, n) piece; see monomials_of_degree for the inner order.
/// Masks restrict which variables may appear in coefficients and differentials.
class GradedPiece {
 public:
  GradedPiece(const CoordinateSpace& space, int k, int n, const std::vector<bool>& poly_mask = {},
              const std::vector<bool>& form_mask = {});

  const CoordinateSpace& space() const { return space_; }
  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<FormKey>& keys() const { return keys_; }
  PolyForm element(std::size_t i) const;
  /// Index of a key, or -1 if it is not in this piece.
  std::ptrdiff_t index_of(const FormKey& key) const;

  /// Coordinates in this basis; throws DimensionMismatch if `a` has terms outside the piece.
  Vector coordinates(const PolyForm& a) const;
  PolyForm combination(const Vector& coords) const;

 private:
  CoordinateSpace space_;
  int k_, n_;
  std::vector<FormKey> keys_;
  std::map<FormKey, std::size_t> index_;
};

std::vector<PolyForm> graded_basis(const CoordinateSpace& space, int k, int n);

/// Matrix of a linear map between graded pieces; column c is the image of src basis element c.
SparseMatrix operator_matrix(const GradedPiece& src, const GradedPiece& dst,
                             const std::function<PolyForm(const PolyForm&)>& op);

/// Strictly increasing k-subsets of {0..n-1} in lexicographic order; only indices with mask[i] when given.
std::vector<std::vector<int>> index_tuples(std::size_t n, int k, const std::vector<bool>& mask = {});

/// Parses the text produced by PolyForm::to_string for the given space.
PolyForm parse_form(const CoordinateSpace& space, std::string_view text);

}  // namespace loophh
