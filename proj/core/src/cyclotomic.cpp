#include "loophh/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "loophh/error.hpp"

namespace loophh {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division by a monic integer polynomial; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {0};
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

IntPoly compute_phi(int n, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), compute_phi(d, memo));
  }
  memo.emplace(n, p);
  return p;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n, int max_order) {
  if (n < 1 || n > max_order) {
    throw Error(ErrorCode::OrderOutOfBounds,
                "cyclotomic order " + std::to_string(n) + " outside [1, " + std::to_string(max_order) + "]");
  }
  std::map<int, IntPoly> memo;
  return compute_phi(n, memo);
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const CyclotomicField& cyclotomic_field(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;

  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return *it->second;

  auto field = std::make_unique<CyclotomicField>();
  field->order = n;
  field->modulus = cyclotomic_polynomial(n);
  field->degree = static_cast<int>(field->modulus.size()) - 1;

  const auto deg = static_cast<std::size_t>(field->degree);
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = 1;
  field->powers.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    field->powers.push_back(cur);
    // multiply by x and reduce with x^deg = -(c_0 + ... + c_{deg-1} x^{deg-1})
    const std::int64_t top = cur[deg - 1];
    for (std::size_t j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < deg; ++j) cur[j] -= top * field->modulus[j];
    }
  }
  auto [it, inserted] = cache.emplace(n, std::move(field));
  return *it->second;
}

}  // namespace loophh
