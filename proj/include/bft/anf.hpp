#pragma once

#include <string>

#include "bft/truth_table.hpp"

namespace bft {

/*! \brief Bit-packed algebraic-normal-form coefficient vector.
 *
 * Bit alpha is the coefficient of the monomial X^alpha (product of the
 * variables in alpha's support).  Shares the index convention of
 * TruthTable.
 */
class AnfPoly {
public:
  explicit AnfPoly(int n) : n_(n), coeffs_(n) {}
  static AnfPoly from_table(int n, TruthTable coeff_bits);

  int vars() const { return n_; }
  uint64_t size() const { return coeffs_.size(); }

  bool coeff(uint64_t mask) const { return coeffs_.bit(mask); }
  void set_coeff(uint64_t mask, bool value) { coeffs_.set_bit(mask, value); }

  /// Max weight of a set mask; 0 for the zero polynomial.
  int degree() const;

  bool is_zero() const { return coeffs_.weight() == 0; }

  const TruthTable& coeff_bits() const { return coeffs_; }

  bool operator==(const AnfPoly& other) const = default;

private:
  int n_;
  TruthTable coeffs_;  // reused as a plain bit vector
};

/// GF(2) Moebius transform, truth table -> ANF.  Self-inverse on the
/// underlying bit sequence.
AnfPoly mobius(const TruthTable& f);

/// ANF -> truth table (the same butterfly).
TruthTable mobius_inv(const AnfPoly& p);

/// Text form: terms joined by " + ", each "1" or "x<i>" factors joined
/// by "*", sorted by (degree, mask).  "0" for the zero polynomial.
std::string to_string(const AnfPoly& p);

}  // namespace bft
