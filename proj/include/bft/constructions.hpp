#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "bft/truth_table.hpp"

namespace bft {

/// Threshold function: 1 iff wt(x) > floor(n/2).
TruthTable majority(int n);

/// Maiorana-McFarland bent function <psi(X),Y> + h(X) on 2k variables;
/// X occupies the low index bits, Y the high ones.  Requires k >= 2.
TruthTable mm_bent(const BitPermutation& psi, const TruthTable& h);

/// The 5-variable 1-resilient seed: degree 3, AI 2, nonlinearity 12.
/// Variables X1,X2,Z1,Z2,Z3 map to index bits 0..4.
TruthTable f5();

/// Parity of m+1 fresh variables plus an MM-with-majority bent core;
/// exactly m-resilient, linear bias 2^-(n-m-1)/2.  Needs n > m,
/// n and m of opposite parity, k = (n-m-1)/2 >= 2.
TruthTable thm_even(int m, int n,
                    const std::optional<BitPermutation>& psi = std::nullopt);

/// Parity of m-1 variables plus f5 plus the bent core; exactly
/// m-resilient, linear bias 2^-(n-m)/2.  Needs m >= 1, n >= m+4 of the
/// same parity, k = (n-m-4)/2 >= 2.
TruthTable thm_odd(int m, int n,
                   const std::optional<BitPermutation>& psi = std::nullopt);

/// The resiliency-boosting transform: (G,H) on n+3 variables from seeds
/// on n; m-resilient seeds give (m+2)-resilient outputs.
std::pair<TruthTable, TruthTable> step(const TruthTable& g, const TruthTable& h,
                                       int max_vars = max_table_vars());

/// t rounds of step followed by a final concatenation: n+3t+1 variables;
/// t = 0 degenerates to Concat(g,h).
TruthTable iter(const TruthTable& g, const TruthTable& h, int t,
                int max_vars = max_table_vars());

/// Iterated construction seeded with X1 + MM and its complement;
/// 2t-resilient (at least), linear bias 2^-(n-t-2)/2.
TruthTable gencons_case1(int n, int t,
                         const std::optional<BitPermutation>& psi = std::nullopt);

/// Iterated construction seeded with the two halves of f5 plus MM;
/// (2t+1)-resilient (at least), linear bias 2^-(n-t-1)/2.
TruthTable gencons_case2(int n, int t,
                         const std::optional<BitPermutation>& psi = std::nullopt);

// ---------------------------------------------------------------------------
// Trade-off solver

struct CaseResult {
  int case_id;  // 1..4
  int n;
  int m;  // achieved resiliency (guaranteed lower bound for cases 3/4)
  int x;  // achieved linear-bias exponent, LB = 2^-x
  int a;  // achieved AI lower bound
  int t;  // iteration count for cases 3/4, -1 otherwise

  bool operator==(const CaseResult& other) const = default;
};

struct TradeoffSolution {
  int m0, x0, a0;
  std::array<CaseResult, 4> cases;
  int selected;  // case id with minimal n, ties to the lowest id
};

/// Minimal n per construction whose achieved parameters meet the targets.
TradeoffSolution solve_tradeoff(int m0, int x0, int a0);

/// max(m0+1, 2*x0, 2*a0-1) - 1: gates forced by non-degeneracy alone.
int gate_lower_bound(int m0, int x0, int a0);

/// Builds the function realizing one solver case.
TruthTable build_case_function(const CaseResult& c,
                               const std::optional<BitPermutation>& psi = std::nullopt);

/// The twelve target rows exercised by the solver's reference table.
std::array<std::array<int, 3>, 12> tradeoff_targets();

// ---------------------------------------------------------------------------
// Parameterized construction handle (CLI and netlist synthesis)

enum class Family { maj, mm, f5, thm_even, thm_odd, step, iter, gencons1, gencons2 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct ConstructionParams {
  Family family = Family::f5;
  int n = 0;  // function variables (maj, thm_even, thm_odd, gencons)
  int m = 0;  // resiliency (thm_even, thm_odd)
  int t = 0;  // rounds (gencons)
  int k = 0;  // block size (mm)
  std::optional<BitPermutation> psi;
};

/// Total input variables of the parameterized function.
int param_vars(const ConstructionParams& p);

/// Table form; throws for step/iter (those take explicit seeds) and for
/// sizes beyond max_vars.
TruthTable build(const ConstructionParams& p, int max_vars = max_table_vars());

/// Point evaluation straight from the structural formula; works far
/// beyond table scale (the point spans ceil(n/64) words, LSB-first).
bool structural_eval(const ConstructionParams& p, std::span<const uint64_t> point);

}  // namespace bft
