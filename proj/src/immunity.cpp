#include "bft/immunity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bft {

namespace {

// Next mask of the same popcount (Gosper); returns 0 on wrap.
uint64_t next_same_weight(uint64_t v) {
  const uint64_t c = v & -v;
  const uint64_t r = v + c;
  if (r == 0) return 0;
  return (((r ^ v) >> 2) / c) | r;
}

std::vector<uint32_t> support_points(const TruthTable& t) {
  std::vector<uint32_t> pts;
  pts.reserve(t.weight());
  const auto& w = t.words();
  for (size_t wi = 0; wi < w.size(); ++wi) {
    uint64_t word = w[wi];
    while (word) {
      const int b = std::countr_zero(word);
      word &= word - 1;
      pts.push_back(static_cast<uint32_t>(wi * 64 + b));
    }
  }
  return pts;
}

// Incremental GF(2) elimination over the points of a fixed support set.
// Monomial indicator columns are inserted in graded (degree, mask) order;
// the first linearly dependent column yields a minimum-degree annihilator,
// recovered from the tracked combination.
class DependencyFinder {
public:
  explicit DependencyFinder(std::vector<uint32_t> points)
      : points_(std::move(points)),
        col_words_((points_.size() + 63) / 64),
        pivot_of_lead_(points_.size(), -1) {}

  // Returns the monomial masks of a dependency involving `alpha` if one
  // exists, nullopt otherwise (column stored as a new pivot).
  std::optional<std::vector<uint64_t>> insert(uint64_t alpha) {
    const size_t id = monomials_.size();
    monomials_.push_back(alpha);
    std::vector<uint64_t> col(col_words_, 0);
    for (size_t r = 0; r < points_.size(); ++r) {
      if ((points_[r] & alpha) == alpha) col[r >> 6] |= uint64_t{1} << (r & 63);
    }
    std::vector<uint64_t> combo(id / 64 + 1, 0);
    combo[id >> 6] |= uint64_t{1} << (id & 63);

    int lead;
    while ((lead = leading_bit(col)) >= 0) {
      const int32_t e = pivot_of_lead_[lead];
      if (e < 0) {
        pivot_of_lead_[lead] = static_cast<int32_t>(entries_.size());
        entries_.push_back({std::move(col), std::move(combo)});
        return std::nullopt;
      }
      xor_into(col, entries_[e].col);
      xor_into(combo, entries_[e].combo);
    }
    std::vector<uint64_t> masks;
    for (size_t i = 0; i < combo.size(); ++i) {
      uint64_t word = combo[i];
      while (word) {
        const int b = std::countr_zero(word);
        word &= word - 1;
        masks.push_back(monomials_[i * 64 + b]);
      }
    }
    return masks;
  }

private:
  struct Entry {
    std::vector<uint64_t> col;
    std::vector<uint64_t> combo;
  };

  static int leading_bit(const std::vector<uint64_t>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i]) return static_cast<int>(i * 64 + std::countr_zero(v[i]));
    }
    return -1;
  }

  static void xor_into(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
    const size_t k = std::min(dst.size(), src.size());
    for (size_t i = 0; i < k; ++i) dst[i] ^= src[i];
  }

  std::vector<uint32_t> points_;
  size_t col_words_;
  std::vector<int32_t> pivot_of_lead_;
  std::vector<Entry> entries_;
  std::vector<uint64_t> monomials_;
};

AnnihilatorWitness make_witness(const TruthTable& side_table, AnnihilatorSide side,
                                const std::vector<uint64_t>& masks, int degree) {
  AnfPoly g(side_table.vars());
  for (uint64_t m : masks) g.set_coeff(m, true);
  const TruthTable g_table = mobius_inv(g);
  if (g_table.weight() == 0) throw std::logic_error("annihilator witness is zero");
  if ((g_table & side_table).weight() != 0) {
    throw std::logic_error("annihilator witness fails pointwise check");
  }
  return AnnihilatorWitness{side, std::move(g), degree};
}

// Sweeps one side over degrees [0, cap]; the per-degree generator is
// shared with algebraic_immunity, which interleaves two sides.
class SideSearch {
public:
  SideSearch(const TruthTable& f, AnnihilatorSide side)
      : side_(side),
        table_(side == AnnihilatorSide::f ? f : ~f),
        finder_(support_points(table_)) {}

  bool side_is_constant_one() const { return table_.weight() == table_.size(); }

  // Processes every monomial of weight `degree`; non-null on dependency.
  std::optional<AnnihilatorWitness> sweep_degree(int degree) {
    const int n = table_.vars();
    uint64_t mask = degree == 0 ? 0 : (uint64_t{1} << degree) - 1;
    const uint64_t limit = uint64_t{1} << n;
    while (mask < limit) {
      if (auto dep = finder_.insert(mask)) {
        return make_witness(table_, side_, *dep, degree);
      }
      if (degree == 0) break;
      mask = next_same_weight(mask);
      if (mask == 0) break;
    }
    return std::nullopt;
  }

private:
  AnnihilatorSide side_;
  TruthTable table_;
  DependencyFinder finder_;
};

}  // namespace

std::pair<int, AnnihilatorWitness> min_annihilator_degree(const TruthTable& f,
                                                          AnnihilatorSide side) {
  SideSearch search(f, side);
  if (search.side_is_constant_one()) {
    throw std::invalid_argument(
        "constant-one side admits no nonzero annihilator of degree <= n");
  }
  for (int d = 0; d <= f.vars(); ++d) {
    if (auto w = search.sweep_degree(d)) return {d, std::move(*w)};
  }
  throw std::logic_error("annihilator search exhausted all degrees");
}

AiResult algebraic_immunity(const TruthTable& f, const AiOptions& options) {
  const int n = f.vars();
  const int hard_cap = (n + 1) / 2;
  if (!options.degree_cap && n > options.max_vars) {
    throw std::invalid_argument(
        "exact AI capped at n <= " + std::to_string(options.max_vars) +
        "; pass a degree cap for bound-check mode");
  }
  int cap = hard_cap;
  if (options.degree_cap) cap = std::min(cap, *options.degree_cap);

  SideSearch on_f(f, AnnihilatorSide::f);
  SideSearch on_complement(f, AnnihilatorSide::complement);
  for (int d = 0; d <= cap; ++d) {
    if (!on_f.side_is_constant_one()) {
      if (auto w = on_f.sweep_degree(d)) return {d, true, std::move(*w)};
    }
    if (!on_complement.side_is_constant_one()) {
      if (auto w = on_complement.sweep_degree(d)) return {d, true, std::move(*w)};
    }
  }
  if (cap >= hard_cap) {
    throw std::logic_error("AI exceeded ceil(n/2)");  // unreachable by theory
  }
  return {cap + 1, false, std::nullopt};
}

namespace {

// Row echelon over ANF columns sorted by (degree desc, mask asc), tracking
// each row's preimage g.  Used by FAI to read off min deg(f g) for
// deg(g) <= e as the degree of the deepest pivot column.
struct ProductEchelon {
  std::vector<uint32_t> col_degree;            // per permuted column
  std::vector<int32_t> pivot_of_lead;          // column -> entry id
  struct Entry {
    std::vector<uint64_t> row;    // ANF of f*g in permuted column order
    std::vector<uint64_t> combo;  // over the monomial basis of g
    int lead;
  };
  std::vector<Entry> entries;
};

}  // namespace

int fast_algebraic_immunity(const TruthTable& f, int max_vars) {
  const int n = f.vars();
  if (n > max_vars) {
    throw std::invalid_argument("FAI capped at n <= " + std::to_string(max_vars));
  }
  const AiResult ai = algebraic_immunity(f);
  if (ai.value == 0) return 0;  // constant function, degenerate
  int best = 2 * ai.value;

  // Permute ANF coordinates so that higher-degree monomials come first;
  // the deepest pivot of the row space then gives min deg(f g).
  const uint64_t count = uint64_t{1} << n;
  std::vector<uint64_t> mask_of_pos(count);
  for (uint64_t m = 0; m < count; ++m) mask_of_pos[m] = m;
  std::stable_sort(mask_of_pos.begin(), mask_of_pos.end(), [](uint64_t a, uint64_t b) {
    const int wa = std::popcount(a), wb = std::popcount(b);
    return wa != wb ? wa > wb : a < b;
  });
  std::vector<uint32_t> pos_of_mask(count);
  for (uint64_t p = 0; p < count; ++p) pos_of_mask[mask_of_pos[p]] = static_cast<uint32_t>(p);

  // g basis monomials in graded order; mask 0 is index 0.
  std::vector<uint64_t> g_basis;
  for (int d = 0; d < ai.value; ++d) {
    uint64_t m = d == 0 ? 0 : (uint64_t{1} << d) - 1;
    while (m < count) {
      g_basis.push_back(m);
      if (d == 0) break;
      m = next_same_weight(m);
      if (m == 0) break;
    }
  }

  const size_t row_words = (count + 63) / 64;
  for (int e = 1; e < ai.value; ++e) {
    size_t basis_size = 0;
    while (basis_size < g_basis.size() &&
           std::popcount(g_basis[basis_size]) <= e) {
      ++basis_size;
    }
    ProductEchelon ech;
    ech.pivot_of_lead.assign(count, -1);
    const size_t combo_words = (basis_size + 63) / 64;
    for (size_t gi = 0; gi < basis_size; ++gi) {
      // truth table of the monomial, product with f, then its ANF
      TruthTable mono(n);
      const uint64_t alpha = g_basis[gi];
      for (uint64_t x = alpha; x < count; x = (x + 1) | alpha) {
        mono.set_bit(x, true);
      }
      const AnfPoly product = mobius(f & mono);
      std::vector<uint64_t> row(row_words, 0);
      for (uint64_t m = 0; m < count; ++m) {
        if (product.coeff(m)) {
          const uint32_t p = pos_of_mask[m];
          row[p >> 6] |= uint64_t{1} << (p & 63);
        }
      }
      std::vector<uint64_t> combo(combo_words, 0);
      combo[gi >> 6] |= uint64_t{1} << (gi & 63);
      int lead = -1;
      for (;;) {
        lead = -1;
        for (size_t i = 0; i < row_words; ++i) {
          if (row[i]) {
            lead = static_cast<int>(i * 64 + std::countr_zero(row[i]));
            break;
          }
        }
        if (lead < 0) throw std::logic_error("f*g vanished below AI");  // annihilator
        const int32_t prev = ech.pivot_of_lead[lead];
        if (prev < 0) break;
        for (size_t i = 0; i < row_words; ++i) row[i] ^= ech.entries[prev].row[i];
        for (size_t i = 0; i < combo_words; ++i) combo[i] ^= ech.entries[prev].combo[i];
      }
      ech.pivot_of_lead[lead] = static_cast<int32_t>(ech.entries.size());
      ech.entries.push_back({std::move(row), std::move(combo), lead});
    }
    // Deepest pivot = achievable min degree; skip it if its unique row is
    // f itself (g = 1, excluded by the deg(g) >= 1 constraint).
    int deepest = -1, second = -1;
    for (const auto& entry : ech.entries) {
      if (entry.lead > deepest) {
        second = deepest;
        deepest = entry.lead;
      } else if (entry.lead > second) {
        second = entry.lead;
      }
    }
    const auto& deep_entry = *std::find_if(
        ech.entries.begin(), ech.entries.end(),
        [&](const auto& entry) { return entry.lead == deepest; });
    bool deep_is_constant_g = std::popcount(deep_entry.combo[0]) == 1 &&
                              (deep_entry.combo[0] & 1) != 0;
    for (size_t i = 1; i < deep_entry.combo.size() && deep_is_constant_g; ++i) {
      if (deep_entry.combo[i]) deep_is_constant_g = false;
    }
    const int pivot = deep_is_constant_g ? second : deepest;
    const int d_min = std::popcount(mask_of_pos[pivot]);
    best = std::min(best, e + d_min);
  }
  return best;
}

int ai_lower_bound_subfunctions(const TruthTable& f, const std::vector<int>& split_vars,
                                const AiOptions& options) {
  if (split_vars.empty() || split_vars.size() >= static_cast<size_t>(f.vars())) {
    throw std::invalid_argument("split must be a nonempty proper variable subset");
  }
  int bound = f.vars();
  for (uint64_t a = 0; a < (uint64_t{1} << split_vars.size()); ++a) {
    std::map<int, bool> fixed;
    for (size_t j = 0; j < split_vars.size(); ++j) {
      fixed[split_vars[j]] = (a >> j) & 1;
    }
    const AiResult sub = algebraic_immunity(restrict_vars(f, fixed), options);
    if (!sub.exact) throw std::invalid_argument("sub-function AI hit the resource cap");
    bound = std::min(bound, sub.value);
  }
  return bound;
}

}  // namespace bft
