#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loophh {

/// Exact element of Q or of a cyclotomic field Q(zeta_n) = Q[x]/(Phi_n).
///
/// Rationals are the order-1 case. Values are canonical: coefficient vectors are
/// reduced modulo Phi_n, and an element whose coordinates beyond the constant term
/// vanish is stored as a rational. Mixed-order arithmetic promotes both operands
/// to the lcm order.
class Scalar {
 public:
  Scalar() : coeffs_(1) {}
  Scalar(long value) : coeffs_{mpq_class(value)} {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class value);

  static Scalar fraction(long num, long den);
  /// zeta_n^power, reduced into Q(zeta_n).
  static Scalar root_of_unity(int n, long power = 1);
  /// Element of Q(zeta_n) given by coefficients of 1, zeta, zeta^2, ...; any length.
  static Scalar from_coefficients(int n, std::vector<mpq_class> coeffs);

  /// Cyclotomic order the value is currently represented in (1 for rationals).
  int order() const { return order_; }
  bool is_rational() const { return order_ == 1; }
  bool is_zero() const;
  bool is_one() const;
  const mpq_class& rational() const;  // throws unless is_rational()
  std::span<const mpq_class> coefficients() const { return coeffs_; }

  /// Same element written in Q(zeta_n); n must be a multiple of order(). Not demoted.
  Scalar promoted(int n) const;
  /// Formal complex conjugation zeta -> zeta^{-1}.
  Scalar conj() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Lcm of all integer denominators of the coordinates.
  mpz_class denominator_lcm() const;
  /// Gcd of all numerators (0 for zero). Meaningful on integral values.
  mpz_class numerator_gcd() const;

  /// Canonical text: `3/4`, `-z3`, `(1+z3)`, `(1/2-z8^3)`; `zN` denotes zeta_N.
  std::string to_string() const;

 private:
  Scalar(int order, std::vector<mpq_class> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  void canonicalize();
  void mul_assign_unchecked(const Scalar& rhs);

  int order_ = 1;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses `p/q`, `-3`, `zN`, `zN^k`, `c*zN^k` and parenthesised sums of these.
Scalar parse_scalar(std::string_view text);

}  // namespace loophh
