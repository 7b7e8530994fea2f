#pragma once

#include <cstdint>
#include <vector>

namespace loophh {

inline constexpr int kDefaultMaxCyclotomicOrder = 512;

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
/// Throws Error(OrderOutOfBounds) for n < 1 or n > max_order.
std::vector<std::int64_t> cyclotomic_polynomial(int n, int max_order = kDefaultMaxCyclotomicOrder);

int euler_phi(int n);

/// Reduction data for Q(zeta_n) = Q[x]/(Phi_n), shared by every Scalar of that order.
struct CyclotomicField {
  int order = 1;
  int degree = 1;                       // phi(order)
  std::vector<std::int64_t> modulus;    // Phi_n, monic, lowest degree first
  /// powers[i] holds zeta^i written in the basis 1, zeta, ..., zeta^(degree-1), 0 <= i < order.
  std::vector<std::vector<std::int64_t>> powers;
};

/// Cached, thread-safe lookup. The returned reference stays valid for the program lifetime.
const CyclotomicField& cyclotomic_field(int n);

}  // namespace loophh
