// Acceptance suite: runs the ten release criteria end to end and prints
// one PASS/FAIL line per criterion.  Exit code 0 iff everything passed.

#include <bit>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bft/constructions.hpp"
#include "bft/immunity.hpp"
#include "bft/io.hpp"
#include "bft/netlist.hpp"
#include "bft/report.hpp"
#include "bft/synth.hpp"
#include "bft/walsh.hpp"

using namespace bft;

namespace {

struct Context {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

int ceil_div4(int v) { return (v + 3) / 4; }

// AI >= bound via a capped annihilator search (exact search when cheap).
bool ai_at_least(const TruthTable& f, int bound) {
  if (bound <= 0) return true;
  AiOptions options;
  options.degree_cap = bound - 1;
  const AiResult r = algebraic_immunity(f, options);
  return r.exact ? r.value >= bound : r.value >= bound;
}

int exact_ai(const TruthTable& f) { return algebraic_immunity(f).value; }

std::string tuple_str(int n, int m, int x, int a) {
  std::ostringstream s;
  s << "(" << n << "," << m << "," << x << "," << a << ")";
  return s.str();
}

// ---------------------------------------------------------------------------

void criterion1_f5(Context& ctx) {
  const TruthTable f = f5();
  const WalshSpectrum s = walsh_transform(f);
  ctx.require(resiliency_order(s) == 1, "f5 resiliency != 1");
  ctx.require(mobius(f).degree() == 3, "f5 degree != 3");
  ctx.require(exact_ai(f) == 2, "f5 AI != 2");
  ctx.require(nonlinearity(s) == 12, "f5 nonlinearity != 12");
  ctx.require(linear_bias(s) == DyadicRational::power_of_two(2), "f5 LB != 1/4");
  const Netlist nl = synth_construction({Family::f5, 0, 0, 0, 0, std::nullopt});
  const GateCount c = nl.count_gates();
  ctx.require(c.xor_gates == 7 && c.and_gates == 4 && c.or_gates == 0 && c.nand_gates == 0,
              "f5 netlist is not 7 XOR + 4 AND");
  ctx.require(verify_equivalence_exhaustive(nl, f).pass, "f5 netlist not equivalent");
}

void criterion2_majority(Context& ctx) {
  for (int n = 2; n <= 13; ++n) {
    const TruthTable m = majority(n);
    const int ai = exact_ai(m);
    if (ai != (n + 1) / 2) {
      ctx.require(false, "AI(Maj_" + std::to_string(n) + ") = " + std::to_string(ai));
    }
    const int want_deg = 1 << (std::bit_width(static_cast<unsigned>(n)) - 1);
    if (mobius(m).degree() != want_deg) {
      ctx.require(false, "deg(Maj_" + std::to_string(n) + ") != " + std::to_string(want_deg));
    }
  }
}

void criterion3_bent(Context& ctx) {
  for (int k = 2; k <= 10; ++k) {
    const TruthTable f = mm_bent(BitPermutation::identity(k), majority(k));
    const WalshSpectrum s = walsh_transform(f);
    ctx.require(is_bent(s), "MM k=" + std::to_string(k) + " not bent");
    const uint64_t want_nl = (uint64_t{1} << (2 * k - 1)) - (uint64_t{1} << (k - 1));
    ctx.require(nonlinearity(s) == want_nl, "MM k=" + std::to_string(k) + " nonlinearity");
    if (k <= 8) {
      ctx.require(ai_at_least(f, (k + 1) / 2),
                  "MM k=" + std::to_string(k) + " AI below ceil(k/2)");
    }
  }
}

void check_even_instance(Context& ctx, int m, int n) {
  const TruthTable f = thm_even(m, n);
  const WalshSpectrum s = walsh_transform(f);
  const std::string id = "thm_even(" + std::to_string(m) + "," + std::to_string(n) + ")";
  ctx.require(resiliency_order(s) == m, id + " resiliency not exactly m");
  ctx.require(linear_bias(s) == DyadicRational::power_of_two((n - m - 1) / 2),
              id + " LB mismatch");
  const int bound = ceil_div4(n - m - 1);
  if (n <= 12) {
    const int ai = exact_ai(f);
    ctx.require(ai >= bound, id + " AI below bound");
    if (m == 1 && n == 10) {
      ctx.note(id + " actual AI = " + std::to_string(ai) + " (bound 2, remark expects 3)");
      ctx.require(ai >= 2, id + " AI below 2");
    }
  } else {
    ctx.require(ai_at_least(f, bound), id + " AI below bound");
  }
}

void criterion4_even(Context& ctx) {
  const std::pair<int, int> cases[] = {{0, 5}, {0, 9}, {1, 10}, {2, 11}, {4, 17}};
  for (const auto& [m, n] : cases) check_even_instance(ctx, m, n);
}

void criterion5_odd(Context& ctx) {
  const std::pair<int, int> cases[] = {{1, 9}, {2, 10}, {4, 20}};
  for (const auto& [m, n] : cases) {
    const TruthTable f = thm_odd(m, n);
    const WalshSpectrum s = walsh_transform(f);
    const std::string id = "thm_odd(" + std::to_string(m) + "," + std::to_string(n) + ")";
    ctx.require(resiliency_order(s) == m, id + " resiliency not exactly m");
    ctx.require(linear_bias(s) == DyadicRational::power_of_two((n - m) / 2),
                id + " LB mismatch");
    const int bound = ceil_div4(n - m - 4);
    if (n <= 12) {
      ctx.require(exact_ai(f) >= bound, id + " AI below bound");
    } else {
      ctx.require(ai_at_least(f, bound), id + " AI below bound");
    }
  }
}

void criterion6_iterated(Context& ctx) {
  struct Seed {
    std::string name;
    TruthTable g, h;
  };
  const std::vector<Seed> seeds = {
      {"(thm_even(0,5), f5)", thm_even(0, 5), f5()},
      {"(f5, f5)", f5(), f5()},
      {"(thm_even(0,7), thm_even(0,7))", thm_even(0, 7), thm_even(0, 7)},
  };
  for (const Seed& seed : seeds) {
    const int n = seed.g.vars();
    const int m_pair = std::min(resiliency_order(walsh_transform(seed.g)),
                                resiliency_order(walsh_transform(seed.h)));
    const int ai_pair = std::min(exact_ai(seed.g), exact_ai(seed.h));
    const TruthTable f0 = concat(seed.g, seed.h);
    const DyadicRational lb0 = linear_bias(walsh_transform(f0));
    const uint64_t nl0 = nonlinearity(walsh_transform(f0));

    // step intermediates
    const auto [G, H] = step(seed.g, seed.h);
    const WalshSpectrum sg = walsh_transform(G);
    const WalshSpectrum sh = walsh_transform(H);
    ctx.require(nonlinearity(sg) == 4 * nl0 && nonlinearity(sh) == 4 * nl0,
                seed.name + " step nonlinearity != 4 nl(f)");
    if (n + 3 <= 10) {
      bool dichotomy = true;
      for (size_t a = 0; a < sg.values.size(); ++a) {
        if (sg.values[a] != 0 && sh.values[a] != 0) dichotomy = false;
      }
      ctx.require(dichotomy, seed.name + " balancedness dichotomy fails");
    }

    for (int t = 1; t <= 2; ++t) {
      const TruthTable f = iter(seed.g, seed.h, t);
      const std::string id = seed.name + " t=" + std::to_string(t);
      ctx.require(f.vars() == n + 3 * t + 1, id + " variable count");
      const WalshSpectrum s = walsh_transform(f);
      ctx.require(resiliency_order(s) >= m_pair + 2 * t, id + " resiliency");
      const DyadicRational lb = linear_bias(s);
      ctx.require(lb.num == lb0.num && lb.exp == lb0.exp + t, id + " LB halving");
      ctx.require(ai_at_least(f, ai_pair), id + " AI below min of seeds");
    }
  }
}

void criterion7_gencons(Context& ctx) {
  struct Case {
    int which, n, t;
  };
  const Case cases[] = {{1, 9, 1}, {1, 13, 1}, {1, 14, 2}, {2, 12, 1}, {2, 15, 2}};
  for (const Case& c : cases) {
    const TruthTable f =
        c.which == 1 ? gencons_case1(c.n, c.t) : gencons_case2(c.n, c.t);
    const std::string id = "gencons" + std::to_string(c.which) + "(" +
                           std::to_string(c.n) + "," + std::to_string(c.t) + ")";
    const WalshSpectrum s = walsh_transform(f);
    const int min_res = c.which == 1 ? 2 * c.t : 2 * c.t + 1;
    const int lb_exp = c.which == 1 ? (c.n - c.t - 2) / 2 : (c.n - c.t - 1) / 2;
    const int ai_bound =
        c.which == 1 ? ceil_div4(c.n - 3 * c.t - 2) : ceil_div4(c.n - 3 * c.t - 5);
    const int res = resiliency_order(s);
    ctx.require(res >= min_res, id + " resiliency below " + std::to_string(min_res));
    ctx.note(id + " exact resiliency = " + std::to_string(res));
    ctx.require(linear_bias(s) == DyadicRational::power_of_two(lb_exp), id + " LB mismatch");
    if (c.n <= 12) {
      ctx.require(exact_ai(f) >= ai_bound, id + " AI below bound");
    } else {
      ctx.require(ai_at_least(f, ai_bound), id + " AI below bound");
    }
  }
}

void criterion8_table(Context& ctx) {
  struct Row {
    int m0, x0, a0;
    int c[4][4];
  };
  // Reference tuples; row (7,9,3) case 1 normalized to the bound value
  // a = 5 (the printed 3 contradicts the identical function in the next
  // row, see the typo note shipped with the solver).
  const Row rows[12] = {
      {4, 6, 3, {{17, 4, 6, 3}, {20, 4, 8, 3}, {20, 4, 8, 3}, {23, 5, 10, 3}}},
      {4, 6, 4, {{21, 4, 8, 4}, {24, 4, 10, 4}, {24, 4, 10, 4}, {27, 5, 12, 4}}},
      {4, 9, 3, {{23, 4, 9, 5}, {22, 4, 9, 4}, {22, 4, 9, 4}, {23, 5, 10, 3}}},
      {4, 9, 4, {{23, 4, 9, 5}, {24, 4, 10, 4}, {24, 4, 10, 4}, {27, 5, 12, 4}}},
      {4, 12, 3, {{29, 4, 12, 6}, {28, 4, 12, 5}, {28, 4, 12, 5}, {27, 5, 12, 4}}},
      {4, 12, 4, {{29, 4, 12, 6}, {28, 4, 12, 5}, {28, 4, 12, 5}, {27, 5, 12, 4}}},
      {7, 6, 3, {{20, 7, 6, 3}, {23, 7, 8, 3}, {26, 8, 10, 3}, {26, 7, 11, 3}}},
      {7, 6, 4, {{24, 7, 8, 4}, {27, 7, 10, 4}, {30, 8, 12, 4}, {30, 7, 13, 4}}},
      {7, 9, 3, {{26, 7, 9, 5}, {25, 7, 9, 4}, {26, 8, 10, 3}, {26, 7, 11, 3}}},
      {7, 9, 4, {{26, 7, 9, 5}, {27, 7, 10, 4}, {30, 8, 12, 4}, {30, 7, 13, 4}}},
      {7, 12, 3, {{32, 7, 12, 6}, {31, 7, 12, 5}, {30, 8, 12, 4}, {28, 7, 12, 4}}},
      {7, 12, 4, {{32, 7, 12, 6}, {31, 7, 12, 5}, {30, 8, 12, 4}, {30, 7, 13, 4}}},
  };
  for (const Row& row : rows) {
    const TradeoffSolution s = solve_tradeoff(row.m0, row.x0, row.a0);
    for (int c = 0; c < 4; ++c) {
      const CaseResult& got = s.cases[c];
      const int* want = row.c[c];
      if (got.n != want[0] || got.m != want[1] || got.x != want[2] || got.a != want[3]) {
        ctx.require(false, "target (" + std::to_string(row.m0) + "," +
                               std::to_string(row.x0) + "," + std::to_string(row.a0) +
                               ") case " + std::to_string(c + 1) + ": got " +
                               tuple_str(got.n, got.m, got.x, got.a) + " want " +
                               tuple_str(want[0], want[1], want[2], want[3]));
      }
    }
    // measured properties of the selected function, where desk-small
    const CaseResult& chosen = s.cases[s.selected - 1];
    if (chosen.n <= 20) {
      const TruthTable f = build_case_function(chosen);
      const WalshSpectrum spec = walsh_transform(f);
      const std::string id = "selected case " + std::to_string(chosen.case_id) +
                             " of (" + std::to_string(row.m0) + "," +
                             std::to_string(row.x0) + "," + std::to_string(row.a0) + ")";
      ctx.require(resiliency_order(spec) >= chosen.m, id + " measured m");
      ctx.require(linear_bias(spec) == DyadicRational::power_of_two(chosen.x),
                  id + " measured x");
      ctx.require(ai_at_least(f, chosen.a), id + " measured a");
    }
  }
}

struct NetlistInstance {
  std::string name;
  ConstructionParams params;
};

std::vector<NetlistInstance> netlist_matrix() {
  std::vector<NetlistInstance> v;
  v.push_back({"f5", {Family::f5, 0, 0, 0, 0, std::nullopt}});
  for (int n = 2; n <= 15; ++n) {
    v.push_back({"maj" + std::to_string(n), {Family::maj, n, 0, 0, 0, std::nullopt}});
  }
  for (int k = 2; k <= 7; ++k) {
    v.push_back({"mm k=" + std::to_string(k), {Family::mm, 0, 0, 0, k, std::nullopt}});
  }
  for (const auto& [m, n] :
       std::vector<std::pair<int, int>>{{0, 5}, {0, 9}, {1, 10}, {2, 11}, {4, 17}}) {
    v.push_back({"thm_even(" + std::to_string(m) + "," + std::to_string(n) + ")",
                 {Family::thm_even, n, m, 0, 0, std::nullopt}});
  }
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 9}, {2, 10}}) {
    v.push_back({"thm_odd(" + std::to_string(m) + "," + std::to_string(n) + ")",
                 {Family::thm_odd, n, m, 0, 0, std::nullopt}});
  }
  for (const auto& [n, t] : std::vector<std::pair<int, int>>{{9, 1}, {13, 1}, {14, 2}}) {
    v.push_back({"gencons1(" + std::to_string(n) + "," + std::to_string(t) + ")",
                 {Family::gencons1, n, 0, t, 0, std::nullopt}});
  }
  for (const auto& [n, t] : std::vector<std::pair<int, int>>{{12, 1}, {15, 2}}) {
    v.push_back({"gencons2(" + std::to_string(n) + "," + std::to_string(t) + ")",
                 {Family::gencons2, n, 0, t, 0, std::nullopt}});
  }
  return v;
}

void criterion9_netlists(Context& ctx) {
  for (const NetlistInstance& inst : netlist_matrix()) {
    const Netlist nl = synth_construction(inst.params);
    const int n = nl.num_inputs();
    if (n <= 18) {
      const TruthTable f = build(inst.params);
      ctx.require(verify_equivalence_exhaustive(nl, f).pass,
                  inst.name + " netlist not equivalent");
    }
    ctx.require(nl.count_gates().total() >= static_cast<uint64_t>(n - 1),
                inst.name + " total below n-1");
  }

  // solver outputs carry the explicit gate lower bound
  for (const auto& [m0, x0, a0] : std::vector<std::array<int, 3>>{{4, 6, 3}, {7, 6, 3}}) {
    const TradeoffSolution s = solve_tradeoff(m0, x0, a0);
    const CaseResult& chosen = s.cases[s.selected - 1];
    ConstructionParams p;
    p.family = chosen.case_id == 1   ? Family::thm_even
               : chosen.case_id == 2 ? Family::thm_odd
               : chosen.case_id == 3 ? Family::gencons1
                                     : Family::gencons2;
    p.n = chosen.n;
    p.m = chosen.m;
    p.t = std::max(chosen.t, 0);
    const Netlist nl = synth_construction(p);
    const uint64_t bound = static_cast<uint64_t>(
        std::max(chosen.n - 1, gate_lower_bound(m0, x0, a0)));
    ctx.require(nl.count_gates().total() >= bound, "solver netlist below the gate bound");
    const auto cert = verify_equivalence_sampled(
        nl, [&](std::span<const uint64_t> pt) { return structural_eval(p, pt); }, 100000,
        2024);
    ctx.require(cert.pass, "solver netlist sampled equivalence failed");
  }

  // linear growth: total(n2) <= 2 total(n1) + K over each family ladder,
  // n2 the nearest valid size at or above 2 n1.  K covers the counting
  // tree's extra carry level and the comparator, both O(log n).
  const int kGrowthSlack = 40;
  struct Ladder {
    std::string name;
    ConstructionParams small, large;
  };
  const std::vector<Ladder> ladders = {
      {"maj", {Family::maj, 7, 0, 0, 0, std::nullopt}, {Family::maj, 14, 0, 0, 0, std::nullopt}},
      {"maj", {Family::maj, 14, 0, 0, 0, std::nullopt}, {Family::maj, 28, 0, 0, 0, std::nullopt}},
      {"maj", {Family::maj, 28, 0, 0, 0, std::nullopt}, {Family::maj, 56, 0, 0, 0, std::nullopt}},
      {"mm", {Family::mm, 0, 0, 0, 3, std::nullopt}, {Family::mm, 0, 0, 0, 6, std::nullopt}},
      {"mm", {Family::mm, 0, 0, 0, 6, std::nullopt}, {Family::mm, 0, 0, 0, 12, std::nullopt}},
      {"thm_even",
       {Family::thm_even, 5, 0, 0, 0, std::nullopt},
       {Family::thm_even, 11, 0, 0, 0, std::nullopt}},
      {"thm_even",
       {Family::thm_even, 11, 0, 0, 0, std::nullopt},
       {Family::thm_even, 23, 0, 0, 0, std::nullopt}},
      {"thm_even",
       {Family::thm_even, 21, 0, 0, 0, std::nullopt},
       {Family::thm_even, 43, 0, 0, 0, std::nullopt}},
      {"thm_odd",
       {Family::thm_odd, 9, 1, 0, 0, std::nullopt},
       {Family::thm_odd, 19, 1, 0, 0, std::nullopt}},
      {"thm_odd",
       {Family::thm_odd, 19, 1, 0, 0, std::nullopt},
       {Family::thm_odd, 39, 1, 0, 0, std::nullopt}},
      {"gencons1",
       {Family::gencons1, 9, 0, 1, 0, std::nullopt},
       {Family::gencons1, 19, 0, 1, 0, std::nullopt}},
      {"gencons1",
       {Family::gencons1, 19, 0, 1, 0, std::nullopt},
       {Family::gencons1, 39, 0, 1, 0, std::nullopt}},
      {"gencons2",
       {Family::gencons2, 12, 0, 1, 0, std::nullopt},
       {Family::gencons2, 24, 0, 1, 0, std::nullopt}},
      {"gencons2",
       {Family::gencons2, 24, 0, 1, 0, std::nullopt},
       {Family::gencons2, 48, 0, 1, 0, std::nullopt}},
  };
  for (const Ladder& ladder : ladders) {
    const uint64_t small = synth_construction(ladder.small).count_gates().total();
    const uint64_t large = synth_construction(ladder.large).count_gates().total();
    ctx.require(large <= 2 * small + kGrowthSlack,
                ladder.name + " growth: total(" + std::to_string(large) + ") > 2*" +
                    std::to_string(small) + "+" + std::to_string(kGrowthSlack));
  }

  // showcase sizes: write the netlists, pin totals <= C n, sample 1e6 points
  const int kLinearC = 8;
  const auto out_dir = std::filesystem::temp_directory_path() / "bft_acceptance";
  std::filesystem::create_directories(out_dir);
  struct Showcase {
    std::string file;
    ConstructionParams params;
  };
  const Showcase shows[] = {
      {"f57.nl", {Family::thm_even, 57, 0, 0, 0, std::nullopt}},
      {"g102.nl", {Family::thm_even, 102, 1, 0, 0, std::nullopt}},
  };
  for (const Showcase& sc : shows) {
    const Netlist nl = synth_construction(sc.params);
    write_netlist_file((out_dir / sc.file).string(), nl);
    const uint64_t total = nl.count_gates().total();
    const int n = nl.num_inputs();
    ctx.note(sc.file + ": " + std::to_string(total) + " gates for n = " + std::to_string(n) +
             " (C = " + std::to_string((total + n - 1) / n) + ")");
    ctx.require(total <= static_cast<uint64_t>(kLinearC * n),
                sc.file + " total above " + std::to_string(kLinearC) + "n");
    const auto cert = verify_equivalence_sampled(
        nl, [&](std::span<const uint64_t> pt) { return structural_eval(sc.params, pt); },
        1000000, 512);
    ctx.require(cert.pass, sc.file + " sampled equivalence failed");
    ctx.require(cert.points_checked == 1000000, sc.file + " sample count");
  }
}

void criterion10_properties(Context& ctx) {
  std::mt19937_64 rng(20240811);

  // Parseval and W(0) = 2^n - 2 wt
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const TruthTable f = TruthTable::random(n, rng);
    const WalshSpectrum s = walsh_transform(f);
    __int128 sum = 0;
    for (int64_t v : s.values) sum += static_cast<__int128>(v) * v;
    if (sum != static_cast<__int128>(f.size()) * f.size()) {
      ctx.require(false, "Parseval failed at n=" + std::to_string(n));
      break;
    }
    if (s.values[0] != static_cast<int64_t>(f.size()) - 2 * static_cast<int64_t>(f.weight())) {
      ctx.require(false, "W(0) identity failed at n=" + std::to_string(n));
      break;
    }
  }

  // Moebius involution
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const TruthTable f = TruthTable::random(n, rng);
    if (mobius_inv(mobius(f)) != f) {
      ctx.require(false, "Moebius involution failed at n=" + std::to_string(n));
      break;
    }
  }

  // nonlinearity against brute-force affine distance
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const TruthTable f = TruthTable::random(n, rng);
    uint64_t best = f.size();
    for (uint64_t alpha = 0; alpha < f.size(); ++alpha) {
      uint64_t d = 0;
      for (uint64_t x = 0; x < f.size(); ++x) {
        if (((std::popcount(alpha & x) & 1) != 0) != f.bit(x)) ++d;
      }
      best = std::min({best, d, f.size() - d});
    }
    if (nonlinearity(walsh_transform(f)) != best) {
      ctx.require(false, "nonlinearity oracle failed at n=" + std::to_string(n));
      break;
    }
  }

  // AI against exhaustive degree <= 2 coefficient search
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const TruthTable f = TruthTable::random(n, rng);
    std::vector<uint64_t> monomials;
    for (uint64_t mask = 0; mask < f.size(); ++mask) {
      if (std::popcount(mask) <= 2) monomials.push_back(mask);
    }
    int brute = 1 << 16;
    const TruthTable complement = ~f;
    for (uint64_t coeffs = 1; coeffs < (uint64_t{1} << monomials.size()); ++coeffs) {
      AnfPoly g(n);
      for (size_t i = 0; i < monomials.size(); ++i) {
        if ((coeffs >> i) & 1) g.set_coeff(monomials[i], true);
      }
      const TruthTable gt = mobius_inv(g);
      if ((gt & f).weight() == 0 || (gt & complement).weight() == 0) {
        brute = std::min(brute, g.degree());
      }
    }
    const int ai = exact_ai(f);
    const bool consistent = ai <= 2 ? brute == ai : brute > 2;
    if (!consistent) {
      ctx.require(false, "AI oracle mismatch at n=" + std::to_string(n));
      break;
    }
  }

  // AI(f) = AI(1+f)
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const TruthTable f = TruthTable::random(n, rng);
    if (exact_ai(f) != exact_ai(~f)) {
      ctx.require(false, "AI complement symmetry failed at n=" + std::to_string(n));
      break;
    }
  }

  // FAI bounds
  int fai_trials = 0;
  while (fai_trials < 200) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const TruthTable f = TruthTable::random(n, rng);
    if (f.weight() == 0 || f.weight() == f.size()) continue;
    ++fai_trials;
    const int ai = exact_ai(f);
    const int fai = fast_algebraic_immunity(f);
    if (fai < 1 + ai || fai > 2 * ai) {
      ctx.require(false, "FAI bounds failed at n=" + std::to_string(n));
      break;
    }
  }

  // divisibility and Siegenthaler across every constructed resilient instance
  std::vector<std::pair<std::string, TruthTable>> instances;
  instances.emplace_back("f5", f5());
  for (const auto& [m, n] :
       std::vector<std::pair<int, int>>{{0, 5}, {0, 9}, {1, 10}, {2, 11}, {4, 17}}) {
    instances.emplace_back("thm_even", thm_even(m, n));
  }
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 9}, {2, 10}, {4, 20}}) {
    instances.emplace_back("thm_odd", thm_odd(m, n));
  }
  for (const auto& [n, t] : std::vector<std::pair<int, int>>{{9, 1}, {13, 1}, {14, 2}}) {
    instances.emplace_back("gencons1", gencons_case1(n, t));
  }
  for (const auto& [n, t] : std::vector<std::pair<int, int>>{{12, 1}, {15, 2}}) {
    instances.emplace_back("gencons2", gencons_case2(n, t));
  }
  for (int n = 2; n <= 10; ++n) instances.emplace_back("maj", majority(n));
  for (const auto& [name, f] : instances) {
    const WalshSpectrum s = walsh_transform(f);
    const int m = resiliency_order(s);
    const int d = mobius(f).degree();
    if (m >= 0) {
      ctx.require(siegenthaler_check(f.vars(), m, d),
                  name + " violates the Siegenthaler bound");
      if (m <= f.vars() - 2 && d >= 1) {
        ctx.require(divisibility_check(s, m, d), name + " violates divisibility");
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Context&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "f5 exactness", criterion1_f5},
      {2, "majority AI/degree suite", criterion2_majority},
      {3, "MM bentness and immunity", criterion3_bent},
      {4, "even-parity family", criterion4_even},
      {5, "odd-parity family", criterion5_odd},
      {6, "iterated construction", criterion6_iterated},
      {7, "general construction", criterion7_gencons},
      {8, "trade-off table reproduction", criterion8_table},
      {9, "netlist certification", criterion9_netlists},
      {10, "randomized property suites", criterion10_properties},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Context ctx;
    const auto start = std::chrono::steady_clock::now();
    c.run(ctx);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[256];
    std::snprintf(line, sizeof line, "[%s] criterion %2d: %s (%.2fs)",
                  ctx.failures.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(), secs);
    std::cout << line << "\n";
    for (const std::string& note : ctx.notes) std::cout << "    note: " << note << "\n";
    for (const std::string& f : ctx.failures) std::cout << "    fail: " << f << "\n";
    if (!ctx.failures.empty()) ++failures;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
