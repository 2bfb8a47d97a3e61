#pragma once

// Brute-force reference implementations used only by the test suites.
// Each one follows the defining sum or an exhaustive search, independent
// of the library's fast paths.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "bft/anf.hpp"
#include "bft/truth_table.hpp"

namespace bft::oracle {

inline int64_t walsh_defining_sum(const TruthTable& f, uint64_t alpha) {
  int64_t acc = 0;
  for (uint64_t x = 0; x < f.size(); ++x) {
    const int sign = (static_cast<int>(f.bit(x)) ^ (std::popcount(alpha & x) & 1)) ? -1 : 1;
    acc += sign;
  }
  return acc;
}

// Minimum Hamming distance to all 2^(n+1) affine functions.
inline uint64_t affine_distance_min(const TruthTable& f) {
  uint64_t best = f.size();
  for (uint64_t alpha = 0; alpha < f.size(); ++alpha) {
    for (int c = 0; c < 2; ++c) {
      uint64_t dist = 0;
      for (uint64_t x = 0; x < f.size(); ++x) {
        const bool lin = ((std::popcount(alpha & x) & 1) != 0) ^ (c != 0);
        if (lin != f.bit(x)) ++dist;
      }
      best = std::min(best, dist);
    }
  }
  return best;
}

// ANF by the defining subset sum.
inline AnfPoly mobius_subset_sum(const TruthTable& f) {
  AnfPoly p(f.vars());
  for (uint64_t alpha = 0; alpha < f.size(); ++alpha) {
    int acc = 0;
    for (uint64_t x = alpha;; x = (x - 1) & alpha) {
      acc ^= f.bit(x) ? 1 : 0;
      if (x == 0) break;
    }
    if (acc) p.set_coeff(alpha, true);
  }
  return p;
}

// Exhaustive search over every nonzero g of degree <= 2: returns the
// minimum annihilator degree across both sides, or nullopt if none of
// degree <= 2 exists.  Meant for n <= 5.
inline std::optional<int> annihilator_min_degree_leq2(const TruthTable& f) {
  std::vector<uint64_t> monomials;
  for (uint64_t m = 0; m < f.size(); ++m) {
    if (std::popcount(m) <= 2) monomials.push_back(m);
  }
  std::optional<int> best;
  const TruthTable complement = ~f;
  for (uint64_t coeffs = 1; coeffs < (uint64_t{1} << monomials.size()); ++coeffs) {
    AnfPoly g(f.vars());
    for (size_t i = 0; i < monomials.size(); ++i) {
      if ((coeffs >> i) & 1) g.set_coeff(monomials[i], true);
    }
    const TruthTable gt = mobius_inv(g);
    if ((gt & f).weight() != 0 && (gt & complement).weight() != 0) continue;
    const int d = g.degree();
    if (!best || d < *best) best = d;
  }
  return best;
}

// Full fast-algebraic-immunity reference: enumerates every g with
// 1 <= deg(g) < ai over the degree-(ai-1) monomial basis.  Exponential in
// the basis size; n <= 6 territory.
inline int fai_exhaustive(const TruthTable& f, int ai) {
  std::vector<uint64_t> monomials;
  for (uint64_t m = 0; m < f.size(); ++m) {
    if (std::popcount(m) <= ai - 1) monomials.push_back(m);
  }
  int best = 2 * ai;
  for (uint64_t coeffs = 1; coeffs < (uint64_t{1} << monomials.size()); ++coeffs) {
    AnfPoly g(f.vars());
    for (size_t i = 0; i < monomials.size(); ++i) {
      if ((coeffs >> i) & 1) g.set_coeff(monomials[i], true);
    }
    const int dg = g.degree();
    if (dg < 1) continue;
    const TruthTable product = f & mobius_inv(g);
    if (product.weight() == 0) continue;  // annihilator of f, not an FAI pair
    best = std::min(best, dg + mobius(product).degree());
  }
  return best;
}

// Min over nonconstant affine g of deg(f*g); the e = 1 slice of the FAI
// search, done by enumeration.
inline int fai_degree1_sweep(const TruthTable& f) {
  int best = 1 << 16;
  const int n = f.vars();
  for (uint64_t mask = 1; mask < (uint64_t{1} << (n + 1)); ++mask) {
    AnfPoly g(n);
    if (mask >> n) g.set_coeff(0, true);
    bool any_linear = false;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) {
        g.set_coeff(uint64_t{1} << v, true);
        any_linear = true;
      }
    }
    if (!any_linear) continue;  // deg(g) must be exactly 1
    const TruthTable product = f & mobius_inv(g);
    if (product.weight() == 0) continue;  // annihilator, outside the FAI sweep
    best = std::min(best, mobius(product).degree());
  }
  return best;
}

}  // namespace bft::oracle
