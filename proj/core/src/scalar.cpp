#include "loophh/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string_view>

#include "loophh/cyclotomic.hpp"
#include "loophh/error.hpp"

namespace loophh {

namespace {

using QPoly = std::vector<mpq_class>;

// Reduce an arbitrary-length coefficient vector in powers of zeta_n into the field basis.
std::vector<mpq_class> reduce(int n, const QPoly& raw) {
  const auto& field = cyclotomic_field(n);
  std::vector<mpq_class> out(static_cast<std::size_t>(field.degree));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (sgn(raw[i]) == 0) continue;
    if (i < out.size()) {
      out[i] += raw[i];
      continue;
    }
    const auto& p = field.powers[i % static_cast<std::size_t>(n)];
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (p[j] != 0) out[j] += raw[i] * p[j];
    }
  }
  return out;
}

void trim(QPoly& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

bool is_zero_poly(const QPoly& p) {
  for (const auto& c : p) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

// Division with remainder in Q[x].
void divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    quot = {mpq_class(0)};
    rem = std::move(a);
    return;
  }
  quot.assign(a.size() - db, mpq_class(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (sgn(a[i]) == 0) continue;
    mpq_class c = a[i] / b[db];
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db == 0 ? 1 : db);
  trim(a);
  rem = std::move(a);
}

QPoly sub_mul(const QPoly& s0, const QPoly& q, const QPoly& s1) {
  QPoly out(std::max(s0.size(), q.size() + s1.size() - 1), mpq_class(0));
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] += s0[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (sgn(q[i]) == 0) continue;
    for (std::size_t j = 0; j < s1.size(); ++j) out[i + j] -= q[i] * s1[j];
  }
  trim(out);
  return out;
}

int checked_lcm(int a, int b) {
  const long l = std::lcm(static_cast<long>(a), static_cast<long>(b));
  if (l > kDefaultMaxCyclotomicOrder) {
    throw Error(ErrorCode::IncompatibleCyclotomicOrders,
                "common order " + std::to_string(l) + " of Q(z" + std::to_string(a) + ") and Q(z" +
                    std::to_string(b) + ") exceeds bound");
  }
  return static_cast<int>(l);
}

}  // namespace

Scalar::Scalar(mpq_class value) : coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::root_of_unity(int n, long power) {
  const long e = ((power % n) + n) % n;
  QPoly raw(static_cast<std::size_t>(e) + 1, mpq_class(0));
  raw[static_cast<std::size_t>(e)] = 1;
  return from_coefficients(n, std::move(raw));
}

Scalar Scalar::from_coefficients(int n, std::vector<mpq_class> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  if (coeffs.empty()) return Scalar();
  Scalar s(n, reduce(n, coeffs));
  s.canonicalize();
  return s;
}

void Scalar::canonicalize() {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return;
  }
  order_ = 1;
  coeffs_.resize(1);
}

namespace {

bool tail_zero(const std::vector<mpq_class>& c) {
  return std::all_of(c.begin() + 1, c.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

}  // namespace

bool Scalar::is_zero() const { return sgn(coeffs_[0]) == 0 && tail_zero(coeffs_); }

bool Scalar::is_one() const { return coeffs_[0] == 1 && tail_zero(coeffs_); }

const mpq_class& Scalar::rational() const {
  if (order_ != 1) throw Error(ErrorCode::InvalidInput, "scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

Scalar Scalar::promoted(int n) const {
  if (n == order_) return *this;
  if (n % order_ != 0) {
    throw Error(ErrorCode::IncompatibleCyclotomicOrders,
                "cannot embed Q(z" + std::to_string(order_) + ") into Q(z" + std::to_string(n) + ")");
  }
  const auto step = static_cast<std::size_t>(n / order_);
  QPoly raw((coeffs_.size() - 1) * step + 1, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return Scalar(n, reduce(n, raw));
}

Scalar Scalar::conj() const {
  if (order_ == 1) return *this;
  const auto n = static_cast<std::size_t>(order_);
  QPoly raw(n, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[(n - i) % n] += coeffs_[i];
  Scalar s(order_, reduce(order_, raw));
  s.canonicalize();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (order_ == 1) return Scalar(mpq_class(1) / coeffs_[0]);

  const auto& field = cyclotomic_field(order_);
  QPoly r0(field.modulus.begin(), field.modulus.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0{mpq_class(0)};
  QPoly s1{mpq_class(1)};
  // invariant: r_i == s_i * a  (mod Phi_n)
  while (!is_zero_poly(r1)) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  trim(r0);
  // Phi_n is irreducible, so the gcd is a nonzero constant
  const mpq_class g = r0[0];
  for (auto& c : s0) c /= g;
  Scalar out(order_, reduce(order_, s0));
  out.canonicalize();
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (order_ == 1 && rhs.order_ == 1) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  const int n = checked_lcm(order_, rhs.order_);
  if (order_ != n) *this = promoted(n);
  if (rhs.order_ == n) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    const Scalar b = rhs.promoted(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

void Scalar::mul_assign_unchecked(const Scalar& rhs) {
  const std::size_t deg = coeffs_.size();
  QPoly raw(2 * deg - 1, mpq_class(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce(order_, raw);
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (order_ == 1 && rhs.order_ == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  if (rhs.order_ == 1) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    canonicalize();
    return *this;
  }
  if (order_ == 1) {
    const mpq_class c = coeffs_[0];
    *this = rhs;
    for (auto& x : coeffs_) x *= c;
    canonicalize();
    return *this;
  }
  const int n = checked_lcm(order_, rhs.order_);
  if (order_ != n) *this = promoted(n);
  if (rhs.order_ == n) {
    mul_assign_unchecked(rhs);
  } else {
    mul_assign_unchecked(rhs.promoted(n));
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (rhs.order_ == 1) {
    for (auto& c : coeffs_) c /= rhs.coeffs_[0];
    return *this;
  }
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const long n = std::lcm(static_cast<long>(a.order_), static_cast<long>(b.order_));
  if (n > kDefaultMaxCyclotomicOrder) return false;
  return (a - b).is_zero();
}

mpz_class Scalar::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

mpz_class Scalar::numerator_gcd() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

std::string Scalar::to_string() const {
  if (order_ == 1) return coeffs_[0].get_str();
  std::string out;
  int terms = 0;
  const std::string z = "z" + std::to_string(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const mpq_class mag = abs(c);
    std::string body;
    if (i == 0) {
      body = mag.get_str();
    } else {
      const std::string power = i == 1 ? z : z + "^" + std::to_string(i);
      body = mag == 1 ? power : mag.get_str() + "*" + power;
    }
    if (terms == 0) {
      out += negative ? "-" + body : body;
    } else {
      out += (negative ? "-" : "+") + body;
    }
    ++terms;
  }
  return terms > 1 ? "(" + out + ")" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "scalar '" + std::string(text_) + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits at position " + std::to_string(start));
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar expr() {
    Scalar acc;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negative) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Scalar term() {
    Scalar acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Scalar factor() {
    skip_ws();
    if (accept('(')) {
      Scalar inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'z' || text_[pos_] == 'Z')) {
      ++pos_;
      const mpz_class n = integer();
      if (n < 1 || n > kDefaultMaxCyclotomicOrder) fail("root of unity order out of range");
      long power = 1;
      if (accept('^')) {
        const bool neg = accept('-');
        const mpz_class e = integer();
        power = neg ? -e.get_si() : e.get_si();
      }
      return Scalar::root_of_unity(static_cast<int>(n.get_si()), power);
    }
    const mpz_class num = integer();
    if (accept('/')) {
      const mpz_class den = integer();
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text_) + "'");
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar(q);
    }
    return Scalar(mpq_class(num));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace loophh
