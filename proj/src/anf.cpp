#include "bft/anf.hpp"

#include <algorithm>
#include <bit>

namespace bft {

namespace {

// In-place subset-sum butterfly over packed bits; its own inverse.
void mobius_in_place(std::vector<uint64_t>& w, int n) {
  static constexpr uint64_t kLow[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
      0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};
  for (int j = 0; j < std::min(n, 6); ++j) {
    const int shift = 1 << j;
    for (auto& word : w) word ^= (word & kLow[j]) << shift;
  }
  for (int j = 6; j < n; ++j) {
    const size_t stride = size_t{1} << (j - 6);
    for (size_t base = 0; base < w.size(); base += 2 * stride) {
      for (size_t i = 0; i < stride; ++i) w[base + stride + i] ^= w[base + i];
    }
  }
}

}  // namespace

AnfPoly AnfPoly::from_table(int n, TruthTable coeff_bits) {
  AnfPoly p(n);
  p.coeffs_ = std::move(coeff_bits);
  return p;
}

int AnfPoly::degree() const {
  int deg = 0;
  const auto& w = coeffs_.words();
  for (size_t wi = 0; wi < w.size(); ++wi) {
    uint64_t word = w[wi];
    while (word) {
      const int b = std::countr_zero(word);
      word &= word - 1;
      deg = std::max(deg, std::popcount(uint64_t{wi} * 64 + b));
    }
  }
  return deg;
}

AnfPoly mobius(const TruthTable& f) {
  TruthTable bits = f;
  mobius_in_place(bits.mutable_words(), f.vars());
  return AnfPoly::from_table(f.vars(), std::move(bits));
}

TruthTable mobius_inv(const AnfPoly& p) {
  TruthTable bits = p.coeff_bits();
  mobius_in_place(bits.mutable_words(), p.vars());
  return bits;
}

std::string to_string(const AnfPoly& p) {
  std::vector<uint64_t> masks;
  for (uint64_t m = 0; m < p.size(); ++m) {
    if (p.coeff(m)) masks.push_back(m);
  }
  if (masks.empty()) return "0";
  std::stable_sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
    const int wa = std::popcount(a), wb = std::popcount(b);
    return wa != wb ? wa < wb : a < b;
  });
  std::string out;
  for (size_t i = 0; i < masks.size(); ++i) {
    if (i) out += " + ";
    uint64_t m = masks[i];
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int v = 0; v < p.vars(); ++v) {
      if ((m >> v) & 1) {
        if (!first) out += "*";
        out += "x" + std::to_string(v + 1);
        first = false;
      }
    }
  }
  return out;
}

}  // namespace bft
