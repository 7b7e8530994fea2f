#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "loophh/matrix.hpp"
#include "loophh/scalar.hpp"

namespace loophh {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// All exponent vectors of total degree `deg` in `nvars` variables, in descending lex order
/// (x1^deg first). If `allowed` is non-empty, only variables with allowed[i] may appear.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int deg, const std::vector<bool>& allowed = {});

/// Number of monomials of degree `deg` in `nvars` variables: C(deg + nvars - 1, nvars - 1), and 1 for nvars = deg = 0.
std::size_t monomial_count(std::size_t nvars, int deg);
std::size_t binomial(std::size_t n, std::size_t k);

/// Sparse polynomial in a fixed number of variables.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Exponents& e, const Scalar& c = Scalar(1));
  /// sum_j coeffs[j] * x_j
  static Polynomial linear(const Vector& coeffs);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Scalar& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  Polynomial pow(int e) const;
  Polynomial derivative(std::size_t i) const;
  /// Substitutes x_i -> images[i] (all images share one variable count).
  Polynomial substitute(const std::vector<Polynomial>& images) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace loophh
