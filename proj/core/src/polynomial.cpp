#include "loophh/polynomial.hpp"

#include <numeric>

#include "loophh/error.hpp"

namespace loophh {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

namespace {

void fill_monomials(std::size_t i, int remaining, Exponents& cur, const std::vector<bool>& allowed,
                    std::vector<Exponents>& out) {
  const std::size_t n = cur.size();
  if (i == n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const bool ok = allowed.empty() || allowed[i];
  for (int a = ok ? remaining : 0; a >= 0; --a) {
    cur[i] = a;
    fill_monomials(i + 1, remaining - a, cur, allowed, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int deg, const std::vector<bool>& allowed) {
  std::vector<Exponents> out;
  if (deg < 0) return out;
  if (!allowed.empty() && allowed.size() != nvars) throw Error(ErrorCode::DimensionMismatch, "variable mask size");
  Exponents cur(nvars, 0);
  fill_monomials(0, deg, cur, allowed, out);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t monomial_count(std::size_t nvars, int deg) {
  if (deg < 0) return 0;
  if (nvars == 0) return deg == 0 ? 1 : 0;
  return binomial(static_cast<std::size_t>(deg) + nvars - 1, nvars - 1);
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Scalar& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(const Vector& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Exponents e(coeffs.size(), 0);
    e[j] = 1;
    p.add_term(e, coeffs[j]);
  }
  return p;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (e.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "monomial has wrong variable count");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable counts differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable counts differ");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomial variable counts differ");
  Polynomial out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial out = constant(nvars_, Scalar(1));
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * Scalar(e[i]));
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw Error(ErrorCode::DimensionMismatch, "substitution arity");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial out(target);
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, Scalar(1)));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      term = term * cache[static_cast<std::size_t>(e[i])];
    }
    out += term;
  }
  return out;
}

}  // namespace loophh
