#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace bft {

/// Desk-scale ceiling on table sizes: 2^26 bits of function, 2^26 signed
/// 64-bit Walsh coefficients (512 MiB).
inline constexpr int kMaxTableVars = 26;

/// Process-wide table ceiling, kMaxTableVars unless reconfigured at
/// startup (CLI --max-n).  Not meant to change mid-computation.
int max_table_vars();
void set_max_table_vars(int n);

/*! \brief Bit-packed value vector of a Boolean function on n variables.
 *
 * Bit i of the table is f(x) for the assignment where variable X_j takes
 * bit (j-1) of i; X_1 is the least-significant index bit.  Words beyond
 * 2^n bits are kept zero.  Instances are immutable values in practice:
 * every operation returns a fresh table.
 */
class TruthTable {
public:
  explicit TruthTable(int n, int max_vars = max_table_vars());

  static TruthTable constant(int n, bool value);
  /// X_var as an n-variable function; var is 1-based.
  static TruthTable variable(int n, int var);
  /// X_1 xor ... xor X_n.
  static TruthTable parity(int n);
  static TruthTable random(int n, std::mt19937_64& rng);
  static TruthTable from_words(int n, std::vector<uint64_t> words);

  int vars() const { return n_; }
  uint64_t size() const { return uint64_t{1} << n_; }

  bool bit(uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1;
  }
  void set_bit(uint64_t index, bool value);

  /// Spec-checked point evaluation; throws on out-of-range x.
  bool evaluate(uint64_t x) const;

  uint64_t weight() const;
  bool is_balanced() const { return weight() == size() / 2; }

  TruthTable operator^(const TruthTable& other) const;
  TruthTable operator&(const TruthTable& other) const;
  TruthTable operator~() const;
  bool operator==(const TruthTable& other) const = default;

  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& mutable_words() { return words_; }

private:
  int n_;
  std::vector<uint64_t> words_;
};

/*! \brief A permutation of the variable slots 1..k.
 *
 * image(j) holds rho(j); applying the permutation to an assignment mask
 * moves bit rho(j)-1 of the input into bit j-1 of the output, matching
 * psi(x_1,...,x_k) = (x_rho(1),...,x_rho(k)).
 */
class BitPermutation {
public:
  static BitPermutation identity(int k);
  static BitPermutation shuffled(int k, uint64_t seed);
  /// From an explicit image list, e.g. {2,3,1}; validates 1..k coverage.
  static BitPermutation from_image(std::vector<int> image);

  int size() const { return static_cast<int>(image_.size()); }
  int image(int j) const { return image_[j - 1]; }

  uint64_t apply_mask(uint64_t x) const;

  bool operator==(const BitPermutation& other) const = default;

private:
  explicit BitPermutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

/// String representation of Concat(g,h): g's bits then h's bits; the new
/// variable X_{n+1} is the most-significant index bit.
TruthTable concat(const TruthTable& g, const TruthTable& h,
                  int max_vars = max_table_vars());

/// g(X) xor h(Y) on disjoint variable sets; g occupies the low index bits.
TruthTable direct_sum(const TruthTable& g, const TruthTable& h,
                      int max_vars = max_table_vars());

/// Direct sum of f with the parity of `count` fresh top variables.
TruthTable add_parity_vars(const TruthTable& f, int count,
                           int max_vars = max_table_vars());

/// Sub-function with the given variables (1-based) pinned to constants;
/// surviving variables are renumbered in ascending original order.
TruthTable restrict_vars(const TruthTable& f, const std::map<int, bool>& fixed);

/// g(X_1,...,X_n) = f(X_rho(1),...,X_rho(n)).
TruthTable permute_vars(const TruthTable& f, const BitPermutation& rho);

/// Reverses the variable order (MSB-first import/export convention).
TruthTable reverse_vars(const TruthTable& f);

/// 1-based indices of the variables f actually depends on.
std::vector<int> nondegenerate_vars(const TruthTable& f);

}  // namespace bft
