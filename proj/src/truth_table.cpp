#include "bft/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bft {

namespace {

int g_max_table_vars = kMaxTableVars;

size_t word_count(int n) { return n <= 6 ? 1 : (size_t{1} << (n - 6)); }

uint64_t tail_mask(int n) {
  return n >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << n)) - 1;
}

void check_vars(int n, int max_vars) {
  if (n < 1 || n > max_vars) {
    throw std::invalid_argument("variable count " + std::to_string(n) +
                                " outside [1, " + std::to_string(max_vars) + "]");
  }
}

}  // namespace

int max_table_vars() { return g_max_table_vars; }

void set_max_table_vars(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("table ceiling must be in [1, 30]");
  g_max_table_vars = n;
}

TruthTable::TruthTable(int n, int max_vars) : n_(n) {
  check_vars(n, max_vars);
  words_.assign(word_count(n), 0);
}

TruthTable TruthTable::constant(int n, bool value) {
  TruthTable t(n);
  if (value) {
    std::fill(t.words_.begin(), t.words_.end(), ~uint64_t{0});
    t.words_.back() &= tail_mask(n);
  }
  return t;
}

TruthTable TruthTable::variable(int n, int var) {
  if (var < 1 || var > n) throw std::invalid_argument("variable index out of range");
  TruthTable t(n);
  const int p = var - 1;
  for (uint64_t i = 0; i < t.size(); i += 64) {
    uint64_t w = 0;
    if (p >= 6) {
      w = (i >> p) & 1 ? ~uint64_t{0} : 0;
    } else {
      static constexpr uint64_t kPattern[6] = {
          0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
          0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL};
      w = kPattern[p];
    }
    t.words_[i >> 6] = w;
  }
  t.words_.back() &= tail_mask(n);
  return t;
}

TruthTable TruthTable::parity(int n) {
  TruthTable t(n);
  for (uint64_t i = 0; i < t.size(); ++i) {
    if (std::popcount(i) & 1) t.words_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  return t;
}

TruthTable TruthTable::random(int n, std::mt19937_64& rng) {
  TruthTable t(n);
  for (auto& w : t.words_) w = rng();
  t.words_.back() &= tail_mask(n);
  return t;
}

TruthTable TruthTable::from_words(int n, std::vector<uint64_t> words) {
  TruthTable t(n);
  if (words.size() != t.words_.size()) throw std::invalid_argument("word count mismatch");
  t.words_ = std::move(words);
  t.words_.back() &= tail_mask(n);
  return t;
}

void TruthTable::set_bit(uint64_t index, bool value) {
  const uint64_t m = uint64_t{1} << (index & 63);
  if (value)
    words_[index >> 6] |= m;
  else
    words_[index >> 6] &= ~m;
}

bool TruthTable::evaluate(uint64_t x) const {
  if (x >= size()) throw std::out_of_range("assignment outside the function domain");
  return bit(x);
}

uint64_t TruthTable::weight() const {
  uint64_t w = 0;
  for (uint64_t word : words_) w += std::popcount(word);
  return w;
}

TruthTable TruthTable::operator^(const TruthTable& other) const {
  if (n_ != other.n_) throw std::invalid_argument("variable count mismatch");
  TruthTable r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ other.words_[i];
  return r;
}

TruthTable TruthTable::operator&(const TruthTable& other) const {
  if (n_ != other.n_) throw std::invalid_argument("variable count mismatch");
  TruthTable r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  return r;
}

TruthTable TruthTable::operator~() const {
  TruthTable r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  r.words_.back() &= tail_mask(n_);
  return r;
}

BitPermutation BitPermutation::identity(int k) {
  std::vector<int> image(k);
  std::iota(image.begin(), image.end(), 1);
  return BitPermutation(std::move(image));
}

BitPermutation BitPermutation::shuffled(int k, uint64_t seed) {
  std::vector<int> image(k);
  std::iota(image.begin(), image.end(), 1);
  std::mt19937_64 rng(seed);
  for (int i = k - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % (i + 1));
    std::swap(image[i], image[j]);
  }
  return BitPermutation(std::move(image));
}

BitPermutation BitPermutation::from_image(std::vector<int> image) {
  const int k = static_cast<int>(image.size());
  if (k == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(k, false);
  for (int v : image) {
    if (v < 1 || v > k || seen[v - 1]) {
      throw std::invalid_argument("image is not a permutation of 1.." + std::to_string(k));
    }
    seen[v - 1] = true;
  }
  return BitPermutation(std::move(image));
}

uint64_t BitPermutation::apply_mask(uint64_t x) const {
  uint64_t y = 0;
  for (size_t j = 0; j < image_.size(); ++j) {
    y |= ((x >> (image_[j] - 1)) & 1) << j;
  }
  return y;
}

TruthTable concat(const TruthTable& g, const TruthTable& h, int max_vars) {
  if (g.vars() != h.vars()) throw std::invalid_argument("concat: variable count mismatch");
  const int n = g.vars();
  check_vars(n + 1, max_vars);
  TruthTable r(n + 1);
  auto& rw = r.mutable_words();
  if (n >= 6) {
    const size_t half = g.words().size();
    std::copy(g.words().begin(), g.words().end(), rw.begin());
    std::copy(h.words().begin(), h.words().end(), rw.begin() + half);
  } else {
    rw[0] = g.words()[0] | (h.words()[0] << (uint64_t{1} << n));
  }
  return r;
}

TruthTable direct_sum(const TruthTable& g, const TruthTable& h, int max_vars) {
  const int n1 = g.vars(), n2 = h.vars();
  check_vars(n1 + n2, max_vars);
  TruthTable r(n1 + n2);
  auto& rw = r.mutable_words();
  if (n1 >= 6) {
    const size_t block = g.words().size();
    for (uint64_t y = 0; y < (uint64_t{1} << n2); ++y) {
      const uint64_t flip = h.bit(y) ? ~uint64_t{0} : 0;
      for (size_t i = 0; i < block; ++i) rw[y * block + i] = g.words()[i] ^ flip;
    }
  } else {
    // Replicate g's sub-word block across a full word, then flip whole
    // blocks according to h.
    const int bn = n1;
    const uint64_t bsize = uint64_t{1} << bn;
    const uint64_t bmask = tail_mask(bn);
    uint64_t pattern = g.words()[0];
    for (uint64_t sh = bsize; sh < 64; sh <<= 1) pattern |= pattern << sh;
    const uint64_t blocks_per_word = std::min<uint64_t>(64 / bsize, r.size() / bsize);
    for (size_t wi = 0; wi < rw.size(); ++wi) {
      uint64_t flip = 0;
      for (uint64_t t = 0; t < blocks_per_word; ++t) {
        const uint64_t y = (uint64_t{wi} * 64 + t * bsize) >> bn;
        if (h.bit(y)) flip |= bmask << (t * bsize);
      }
      rw[wi] = pattern ^ flip;
    }
    rw.back() &= tail_mask(r.vars());
  }
  return r;
}

TruthTable add_parity_vars(const TruthTable& f, int count, int max_vars) {
  if (count < 0) throw std::invalid_argument("negative variable count");
  if (count == 0) return f;
  return direct_sum(f, TruthTable::parity(count), max_vars);
}

TruthTable restrict_vars(const TruthTable& f, const std::map<int, bool>& fixed) {
  const int n = f.vars();
  uint64_t fixed_value = 0;
  std::vector<bool> is_fixed(n, false);
  for (const auto& [var, value] : fixed) {
    if (var < 1 || var > n) throw std::invalid_argument("restrict: variable index out of range");
    is_fixed[var - 1] = true;
    if (value) fixed_value |= uint64_t{1} << (var - 1);
  }
  if (fixed.empty()) return f;
  const int n_free = n - static_cast<int>(fixed.size());
  if (n_free == 0) throw std::invalid_argument("restrict: no free variables left");
  std::vector<int> free_pos;
  for (int p = 0; p < n; ++p)
    if (!is_fixed[p]) free_pos.push_back(p);
  TruthTable r(n_free);
  for (uint64_t i = 0; i < r.size(); ++i) {
    uint64_t x = fixed_value;
    for (int j = 0; j < n_free; ++j) x |= ((i >> j) & 1) << free_pos[j];
    if (f.bit(x)) r.set_bit(i, true);
  }
  return r;
}

TruthTable permute_vars(const TruthTable& f, const BitPermutation& rho) {
  if (rho.size() != f.vars()) throw std::invalid_argument("permutation size mismatch");
  TruthTable r(f.vars());
  for (uint64_t y = 0; y < r.size(); ++y) {
    if (f.bit(rho.apply_mask(y))) r.set_bit(y, true);
  }
  return r;
}

TruthTable reverse_vars(const TruthTable& f) {
  const int n = f.vars();
  TruthTable r(n);
  for (uint64_t i = 0; i < f.size(); ++i) {
    if (!f.bit(i)) continue;
    uint64_t rev = 0;
    for (int b = 0; b < n; ++b)
      if ((i >> b) & 1) rev |= uint64_t{1} << (n - 1 - b);
    r.set_bit(rev, true);
  }
  return r;
}

std::vector<int> nondegenerate_vars(const TruthTable& f) {
  std::vector<int> vars;
  const int n = f.vars();
  for (int p = 0; p < n; ++p) {
    bool depends = false;
    if (p < 6) {
      static constexpr uint64_t kLow[6] = {
          0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
          0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};
      const int shift = 1 << p;
      for (uint64_t w : f.words()) {
        if (((w >> shift) ^ w) & kLow[p]) {
          depends = true;
          break;
        }
      }
    } else {
      const size_t stride = size_t{1} << (p - 6);
      for (size_t base = 0; base < f.words().size() && !depends; base += 2 * stride) {
        for (size_t i = 0; i < stride; ++i) {
          if (f.words()[base + i] != f.words()[base + stride + i]) {
            depends = true;
            break;
          }
        }
      }
    }
    if (depends) vars.push_back(p + 1);
  }
  return vars;
}

}  // namespace bft
