#include "bft/constructions.hpp"

#include <bit>
#include <stdexcept>

namespace bft {

namespace {

BitPermutation psi_or_identity(const std::optional<BitPermutation>& psi, int k) {
  if (!psi) return BitPermutation::identity(k);
  if (psi->size() != k) {
    throw std::invalid_argument("psi has size " + std::to_string(psi->size()) +
                                ", construction needs " + std::to_string(k));
  }
  return *psi;
}

}  // namespace

TruthTable majority(int n) {
  TruthTable t(n);
  const int threshold = n / 2;
  for (uint64_t x = 0; x < t.size(); ++x) {
    if (std::popcount(x) > threshold) t.set_bit(x, true);
  }
  return t;
}

TruthTable mm_bent(const BitPermutation& psi, const TruthTable& h) {
  const int k = h.vars();
  if (psi.size() != k) throw std::invalid_argument("mm_bent: psi size must match h");
  if (k < 2) throw std::invalid_argument("mm_bent: needs k >= 2");
  TruthTable t(2 * k);
  const uint64_t block = uint64_t{1} << k;
  for (uint64_t x = 0; x < block; ++x) {
    const uint64_t px = psi.apply_mask(x);
    const bool hx = h.bit(x);
    for (uint64_t y = 0; y < block; ++y) {
      const bool v = ((std::popcount(px & y) & 1) != 0) ^ hx;
      if (v) t.set_bit((y << k) | x, true);
    }
  }
  return t;
}

TruthTable f5() {
  TruthTable t(5);
  for (uint64_t i = 0; i < 32; ++i) {
    const int x1 = i & 1, x2 = (i >> 1) & 1;
    const int z1 = (i >> 2) & 1, z2 = (i >> 3) & 1, z3 = (i >> 4) & 1;
    const int v = z1 ^ z2 ^ (x1 & (z1 ^ z3)) ^ (x2 & (z2 ^ z3)) ^
                  (x1 & x2 & (z1 ^ z2 ^ z3));
    if (v) t.set_bit(i, true);
  }
  return t;
}

TruthTable thm_even(int m, int n, const std::optional<BitPermutation>& psi) {
  if (m < 0 || n <= m || (n - m) % 2 == 0) {
    throw std::invalid_argument("thm_even: needs n > m >= 0 with opposite parity");
  }
  const int k = (n - m - 1) / 2;
  if (k < 2) throw std::invalid_argument("thm_even: needs k = (n-m-1)/2 >= 2");
  const TruthTable core = mm_bent(psi_or_identity(psi, k), majority(k));
  return direct_sum(TruthTable::parity(m + 1), core);
}

TruthTable thm_odd(int m, int n, const std::optional<BitPermutation>& psi) {
  if (m < 1 || n < m + 4 || (n - m) % 2 != 0) {
    throw std::invalid_argument("thm_odd: needs m >= 1, n >= m+4, same parity");
  }
  const int k = (n - m - 4) / 2;
  if (k < 2) throw std::invalid_argument("thm_odd: needs k = (n-m-4)/2 >= 2");
  const TruthTable tail = direct_sum(f5(), mm_bent(psi_or_identity(psi, k), majority(k)));
  if (m == 1) return tail;
  return direct_sum(TruthTable::parity(m - 1), tail);
}

std::pair<TruthTable, TruthTable> step(const TruthTable& g, const TruthTable& h,
                                       int max_vars) {
  if (g.vars() != h.vars()) throw std::invalid_argument("step: variable count mismatch");
  // G = X_{n+3} + X_{n+2} + Concat(g,h); H swaps the selector role onto
  // X_{n+3}+X_{n+2} and re-levels with X_{n+1}, laid out block by block.
  const TruthTable big_g = direct_sum(concat(g, h, max_vars), TruthTable::parity(2), max_vars);
  const TruthTable ng = ~g, nh = ~h;
  const TruthTable low = concat(concat(g, ng, max_vars), concat(h, nh, max_vars), max_vars);
  const TruthTable high = concat(concat(nh, h, max_vars), concat(ng, g, max_vars), max_vars);
  return {big_g, concat(low, high, max_vars)};
}

TruthTable iter(const TruthTable& g, const TruthTable& h, int t, int max_vars) {
  if (t < 0) throw std::invalid_argument("iter: negative round count");
  if (g.vars() + 3 * t + 1 > max_vars) {
    throw std::invalid_argument("iter: result exceeds the table-size limit");
  }
  TruthTable cur_g = g, cur_h = h;
  for (int i = 0; i < t; ++i) {
    auto [next_g, next_h] = step(cur_g, cur_h, max_vars);
    cur_g = std::move(next_g);
    cur_h = std::move(next_h);
  }
  return concat(cur_g, cur_h, max_vars);
}

namespace {

void check_gencons1(int n, int t, int& k) {
  const int seed_vars = n - 3 * t - 1;
  if (t < 0 || seed_vars < 3 || seed_vars % 2 == 0) {
    throw std::invalid_argument("gencons1: needs n-3t-1 >= 3 and odd");
  }
  k = (seed_vars - 1) / 2;
  if (k < 2) throw std::invalid_argument("gencons1: needs k = (n-3t-2)/2 >= 2");
}

void check_gencons2(int n, int t, int& k) {
  const int seed_vars = n - 3 * t - 1;
  if (t < 0 || seed_vars < 4 || seed_vars % 2 != 0) {
    throw std::invalid_argument("gencons2: needs n-3t-1 >= 4 and even");
  }
  k = (seed_vars - 4) / 2;
  if (k < 2) throw std::invalid_argument("gencons2: needs k = (n-3t-5)/2 >= 2");
}

// Seed pair of case 2: the two cofactors of f5 in X2, each plus MM.
TruthTable gencons2_seed_core(bool complement_half) {
  // g half: Z1+Z2+X1(Z1+Z3); h half: Z1+Z3+X1 Z2, on X1,Z1,Z2,Z3 (bits 0..3).
  TruthTable t(4);
  for (uint64_t i = 0; i < 16; ++i) {
    const int x1 = i & 1;
    const int z1 = (i >> 1) & 1, z2 = (i >> 2) & 1, z3 = (i >> 3) & 1;
    const int v = complement_half ? (z1 ^ z3 ^ (x1 & z2))
                                  : (z1 ^ z2 ^ (x1 & (z1 ^ z3)));
    if (v) t.set_bit(i, true);
  }
  return t;
}

}  // namespace

TruthTable gencons_case1(int n, int t, const std::optional<BitPermutation>& psi) {
  int k = 0;
  check_gencons1(n, t, k);
  const TruthTable core = mm_bent(psi_or_identity(psi, k), majority(k));
  const TruthTable g0 = direct_sum(TruthTable::variable(1, 1), core);
  return iter(g0, ~g0, t);
}

TruthTable gencons_case2(int n, int t, const std::optional<BitPermutation>& psi) {
  int k = 0;
  check_gencons2(n, t, k);
  const TruthTable core = mm_bent(psi_or_identity(psi, k), majority(k));
  const TruthTable g0 = direct_sum(gencons2_seed_core(false), core);
  const TruthTable h0 = direct_sum(gencons2_seed_core(true), core);
  return iter(g0, h0, t);
}

// ---------------------------------------------------------------------------
// Trade-off solver

namespace {

int ceil_div4(int v) { return (v + 3) / 4; }

CaseResult solve_case(int case_id, int m0, int x0, int a0) {
  CaseResult r{};
  r.case_id = case_id;
  r.t = -1;
  switch (case_id) {
    case 1: {
      int n = std::max(m0 + 1 + 2 * x0, m0 + 1 + 4 * a0);
      if ((n - m0) % 2 == 0) ++n;
      r.n = n;
      r.m = m0;
      r.x = (n - m0 - 1) / 2;
      r.a = ceil_div4(n - m0 - 1);
      break;
    }
    case 2: {
      int n = std::max(m0 + 2 * x0, m0 + 4 + 4 * a0);
      if ((n - m0) % 2 != 0) ++n;
      r.n = n;
      r.m = m0;
      r.x = (n - m0) / 2;
      r.a = ceil_div4(n - m0 - 4);
      break;
    }
    case 3: {
      const int t = (m0 + 1) / 2;
      int n = std::max(2 * x0 + t + 2, 4 * a0 + 3 * t + 2);
      if ((n - 3 * t - 1) % 2 == 0) ++n;
      r.t = t;
      r.n = n;
      r.m = 2 * t;
      r.x = (n - t - 2) / 2;
      r.a = ceil_div4(n - 3 * t - 2);
      break;
    }
    case 4: {
      const int t = m0 / 2;  // ceil((m0-1)/2) for m0 >= 0
      int n = std::max(2 * x0 + t + 1, 4 * a0 + 3 * t + 5);
      if ((n - 3 * t - 1) % 2 != 0) ++n;
      r.t = t;
      r.n = n;
      r.m = 2 * t + 1;
      r.x = (n - t - 1) / 2;
      r.a = ceil_div4(n - 3 * t - 5);
      break;
    }
    default:
      throw std::invalid_argument("case id outside 1..4");
  }
  return r;
}

}  // namespace

TradeoffSolution solve_tradeoff(int m0, int x0, int a0) {
  if (m0 < 0 || x0 < 1 || a0 < 1) {
    throw std::invalid_argument("targets need m0 >= 0, x0 >= 1, a0 >= 1");
  }
  TradeoffSolution s{};
  s.m0 = m0;
  s.x0 = x0;
  s.a0 = a0;
  for (int c = 1; c <= 4; ++c) s.cases[c - 1] = solve_case(c, m0, x0, a0);
  s.selected = 1;
  for (int c = 2; c <= 4; ++c) {
    if (s.cases[c - 1].n < s.cases[s.selected - 1].n) s.selected = c;
  }
  return s;
}

int gate_lower_bound(int m0, int x0, int a0) {
  if (m0 < 0 || x0 < 1 || a0 < 1) {
    throw std::invalid_argument("targets need m0 >= 0, x0 >= 1, a0 >= 1");
  }
  return std::max(m0 + 1, std::max(2 * x0, 2 * a0 - 1)) - 1;
}

TruthTable build_case_function(const CaseResult& c, const std::optional<BitPermutation>& psi) {
  switch (c.case_id) {
    case 1:
      return thm_even(c.m, c.n, psi);
    case 2:
      return thm_odd(c.m, c.n, psi);
    case 3:
      return gencons_case1(c.n, c.t, psi);
    case 4:
      return gencons_case2(c.n, c.t, psi);
    default:
      throw std::invalid_argument("case id outside 1..4");
  }
}

std::array<std::array<int, 3>, 12> tradeoff_targets() {
  return {{{4, 6, 3},
           {4, 6, 4},
           {4, 9, 3},
           {4, 9, 4},
           {4, 12, 3},
           {4, 12, 4},
           {7, 6, 3},
           {7, 6, 4},
           {7, 9, 3},
           {7, 9, 4},
           {7, 12, 3},
           {7, 12, 4}}};
}

// ---------------------------------------------------------------------------
// Parameterized handles

std::string family_name(Family f) {
  switch (f) {
    case Family::maj: return "maj";
    case Family::mm: return "mm";
    case Family::f5: return "f5";
    case Family::thm_even: return "thm-even";
    case Family::thm_odd: return "thm-odd";
    case Family::step: return "step";
    case Family::iter: return "iter";
    case Family::gencons1: return "gencons1";
    case Family::gencons2: return "gencons2";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::maj, Family::mm, Family::f5, Family::thm_even,
                   Family::thm_odd, Family::step, Family::iter, Family::gencons1,
                   Family::gencons2}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

int param_vars(const ConstructionParams& p) {
  switch (p.family) {
    case Family::maj: return p.n;
    case Family::mm: return 2 * p.k;
    case Family::f5: return 5;
    case Family::thm_even:
    case Family::thm_odd:
    case Family::gencons1:
    case Family::gencons2: return p.n;
    case Family::step:
    case Family::iter: break;
  }
  throw std::invalid_argument("family has no parameter-determined size");
}

TruthTable build(const ConstructionParams& p, int max_vars) {
  if (param_vars(p) > max_vars) {
    throw std::invalid_argument("construction exceeds the table-size limit");
  }
  switch (p.family) {
    case Family::maj: return majority(p.n);
    case Family::mm: return mm_bent(psi_or_identity(p.psi, p.k), majority(p.k));
    case Family::f5: return f5();
    case Family::thm_even: return thm_even(p.m, p.n, p.psi);
    case Family::thm_odd: return thm_odd(p.m, p.n, p.psi);
    case Family::gencons1: return gencons_case1(p.n, p.t, p.psi);
    case Family::gencons2: return gencons_case2(p.n, p.t, p.psi);
    case Family::step:
    case Family::iter: break;
  }
  throw std::invalid_argument("step/iter need explicit seed functions");
}

// ---------------------------------------------------------------------------
// Structural evaluation

namespace {

bool point_bit(std::span<const uint64_t> point, int i) {
  return (point[i >> 6] >> (i & 63)) & 1;
}

uint64_t point_field(std::span<const uint64_t> point, int start, int len) {
  uint64_t v = 0;
  for (int i = 0; i < len; ++i) {
    if (point_bit(point, start + i)) v |= uint64_t{1} << i;
  }
  return v;
}

bool parity_range(std::span<const uint64_t> point, int start, int len) {
  int acc = 0;
  for (int i = 0; i < len; ++i) acc ^= point_bit(point, start + i) ? 1 : 0;
  return acc != 0;
}

bool eval_maj(uint64_t x, int k) { return std::popcount(x) > k / 2; }

bool eval_mm(const BitPermutation& psi, std::span<const uint64_t> point, int start, int k) {
  const uint64_t x = point_field(point, start, k);
  const uint64_t y = point_field(point, start + k, k);
  return (((std::popcount(psi.apply_mask(x) & y)) & 1) != 0) ^ eval_maj(x, k);
}

bool eval_f5_bits(bool x1, bool x2, bool z1, bool z2, bool z3) {
  return z1 ^ z2 ^ (x1 & (z1 ^ z3)) ^ (x2 & (z2 ^ z3)) ^ (x1 & x2 & (z1 ^ z2 ^ z3));
}

}  // namespace

bool structural_eval(const ConstructionParams& p, std::span<const uint64_t> point) {
  switch (p.family) {
    case Family::maj:
      return eval_maj(point_field(point, 0, p.n), p.n);
    case Family::mm:
      return eval_mm(psi_or_identity(p.psi, p.k), point, 0, p.k);
    case Family::f5:
      return eval_f5_bits(point_bit(point, 0), point_bit(point, 1), point_bit(point, 2),
                          point_bit(point, 3), point_bit(point, 4));
    case Family::thm_even: {
      const int k = (p.n - p.m - 1) / 2;
      return parity_range(point, 0, p.m + 1) ^
             eval_mm(psi_or_identity(p.psi, k), point, p.m + 1, k);
    }
    case Family::thm_odd: {
      const int k = (p.n - p.m - 4) / 2;
      const int base = p.m - 1;
      const bool f5_val =
          eval_f5_bits(point_bit(point, base), point_bit(point, base + 1),
                       point_bit(point, base + 2), point_bit(point, base + 3),
                       point_bit(point, base + 4));
      return parity_range(point, 0, p.m - 1) ^ f5_val ^
             eval_mm(psi_or_identity(p.psi, k), point, base + 5, k);
    }
    case Family::gencons1:
    case Family::gencons2: {
      const bool case1 = p.family == Family::gencons1;
      const int seed_vars = p.n - 3 * p.t - 1;
      const int k = case1 ? (seed_vars - 1) / 2 : (seed_vars - 4) / 2;
      const BitPermutation psi = psi_or_identity(p.psi, k);
      bool g, h;
      if (case1) {
        const bool mm = eval_mm(psi, point, 1, k);
        g = point_bit(point, 0) ^ mm;
        h = !g;
      } else {
        const bool x1 = point_bit(point, 0);
        const bool z1 = point_bit(point, 1), z2 = point_bit(point, 2),
                   z3 = point_bit(point, 3);
        const bool mm = eval_mm(psi, point, 4, k);
        g = z1 ^ z2 ^ (x1 & (z1 ^ z3)) ^ mm;
        h = z1 ^ z3 ^ (x1 & z2) ^ mm;
      }
      int v = seed_vars;
      for (int i = 0; i < p.t; ++i) {
        const bool b1 = point_bit(point, v), b2 = point_bit(point, v + 1),
                   b3 = point_bit(point, v + 2);
        const bool s = b2 ^ b3;
        const bool next_g = b3 ^ b2 ^ (b1 ? h : g);
        const bool next_h = b3 ^ b1 ^ (s ? h : g);
        g = next_g;
        h = next_h;
        v += 3;
      }
      return point_bit(point, v) ? h : g;
    }
    case Family::step:
    case Family::iter:
      break;
  }
  throw std::invalid_argument("step/iter need explicit seed functions");
}

}  // namespace bft
