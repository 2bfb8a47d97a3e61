#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bft/truth_table.hpp"

namespace bft {

/*! \brief Exact dyadic rational, numerator / 2^exponent in lowest terms.
 *
 * Kept exact so spectral equalities like LB = 2^-(n-m-1)/2 are bit-exact;
 * the numerator is odd after normalization (or zero with exponent 0).
 */
struct DyadicRational {
  uint64_t num = 0;
  int exp = 0;

  static DyadicRational from_ratio(uint64_t numerator, int pow2_denominator);
  static DyadicRational power_of_two(int e) { return {1, e}; }

  bool operator==(const DyadicRational& other) const = default;
  std::string to_string() const;  // "num/2^exp"
};

/// All 2^n Walsh coefficients; entry alpha is W_f(alpha), the correlation
/// sum over (-1)^(f(x) + <alpha,x>).  Signed 64-bit: exact for any n here.
struct WalshSpectrum {
  int n = 0;
  std::vector<int64_t> values;
};

/// Fast in-place butterfly, O(n 2^n).
WalshSpectrum walsh_transform(const TruthTable& f);

int64_t max_abs_value(const WalshSpectrum& s);

/// 2^(n-1) - max|W|/2.
uint64_t nonlinearity(const WalshSpectrum& s);

/// max|W| / 2^n as an exact dyadic rational.
DyadicRational linear_bias(const WalshSpectrum& s);

/// Largest m with W(alpha) = 0 for all wt(alpha) <= m; -1 when unbalanced.
int resiliency_order(const WalshSpectrum& s);

/// n even and every |W| equal to 2^(n/2).
bool is_bent(const WalshSpectrum& s);

/// chi(n) <= LB <= 2 chi(n) with chi(n) = floor(2^(n/2-1)) / 2^(n-1),
/// compared exactly in integers.
bool almost_optimal_lb(const WalshSpectrum& s);

/// Every Walsh value divisible by 2^(m+2+floor((n-m-2)/d)) for an
/// m-resilient degree-d function.  Rejects d = 0 and m outside [0, n-2].
bool divisibility_check(const WalshSpectrum& s, int m, int d);

/// Siegenthaler: (m = n-1 and d = 1) or (m <= n-2 and d <= n-m-1).
bool siegenthaler_check(int n, int m, int d);

}  // namespace bft
