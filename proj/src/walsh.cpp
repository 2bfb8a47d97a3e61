#include "bft/walsh.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace bft {

DyadicRational DyadicRational::from_ratio(uint64_t numerator, int pow2_denominator) {
  if (numerator == 0) return {0, 0};
  int e = pow2_denominator;
  while ((numerator & 1) == 0 && e > 0) {
    numerator >>= 1;
    --e;
  }
  if (e < 0) throw std::invalid_argument("negative denominator exponent");
  return {numerator, e};
}

std::string DyadicRational::to_string() const {
  return std::to_string(num) + "/2^" + std::to_string(exp);
}

WalshSpectrum walsh_transform(const TruthTable& f) {
  const int n = f.vars();
  WalshSpectrum s;
  s.n = n;
  s.values.resize(f.size());
  for (uint64_t i = 0; i < f.size(); ++i) s.values[i] = f.bit(i) ? -1 : 1;
  for (int j = 0; j < n; ++j) {
    const uint64_t half = uint64_t{1} << j;
    for (uint64_t base = 0; base < f.size(); base += 2 * half) {
      for (uint64_t i = base; i < base + half; ++i) {
        const int64_t a = s.values[i];
        const int64_t b = s.values[i + half];
        s.values[i] = a + b;
        s.values[i + half] = a - b;
      }
    }
  }
  return s;
}

int64_t max_abs_value(const WalshSpectrum& s) {
  int64_t m = 0;
  for (int64_t v : s.values) m = std::max(m, v < 0 ? -v : v);
  return m;
}

uint64_t nonlinearity(const WalshSpectrum& s) {
  return (uint64_t{1} << (s.n - 1)) - static_cast<uint64_t>(max_abs_value(s)) / 2;
}

DyadicRational linear_bias(const WalshSpectrum& s) {
  return DyadicRational::from_ratio(static_cast<uint64_t>(max_abs_value(s)), s.n);
}

int resiliency_order(const WalshSpectrum& s) {
  int min_weight = s.n;  // parity reaches the maximum order n-1
  for (uint64_t a = 0; a < s.values.size(); ++a) {
    if (s.values[a] != 0) {
      min_weight = std::min(min_weight, std::popcount(a));
      if (min_weight == 0) break;
    }
  }
  return min_weight - 1;
}

bool is_bent(const WalshSpectrum& s) {
  if (s.n % 2 != 0) return false;
  const int64_t want = int64_t{1} << (s.n / 2);
  for (int64_t v : s.values) {
    if (v != want && v != -want) return false;
  }
  return true;
}

namespace {

// floor(2^(n/2-1)) in exact integer arithmetic; isqrt(2^(n-2)) for odd n.
uint64_t covering_radius_floor(int n) {
  if (n == 1) return 0;
  if (n % 2 == 0) return uint64_t{1} << (n / 2 - 1);
  const uint64_t square = uint64_t{1} << (n - 2);
  auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(square)));
  while (r * r > square) --r;
  while ((r + 1) * (r + 1) <= square) ++r;
  return r;
}

}  // namespace

bool almost_optimal_lb(const WalshSpectrum& s) {
  // Compare LB = u / 2^(n-1) with chi = lower / 2^(n-1), u = max|W| / 2.
  const uint64_t u = static_cast<uint64_t>(max_abs_value(s)) / 2;
  const uint64_t lower = covering_radius_floor(s.n);
  return lower <= u && u <= 2 * lower;
}

bool divisibility_check(const WalshSpectrum& s, int m, int d) {
  if (d == 0) throw std::invalid_argument("divisibility check requires degree >= 1");
  if (m < 0 || m > s.n - 2) {
    throw std::invalid_argument("divisibility check requires 0 <= m <= n-2");
  }
  const int e = m + 2 + (s.n - m - 2) / d;
  const int64_t modulus = int64_t{1} << e;
  for (int64_t v : s.values) {
    if (v % modulus != 0) return false;
  }
  return true;
}

bool siegenthaler_check(int n, int m, int d) {
  if (m < 0 || m > n - 1) throw std::invalid_argument("resiliency order outside [0, n-1]");
  if (m == n - 1) return d == 1;
  return d <= n - m - 1;
}

}  // namespace bft
