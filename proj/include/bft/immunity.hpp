#pragma once

#include <optional>
#include <utility>

#include "bft/anf.hpp"
#include "bft/truth_table.hpp"

namespace bft {

inline constexpr int kMaxAiVars = 18;
inline constexpr int kMaxFaiVars = 12;

enum class AnnihilatorSide { f, complement };

/*! \brief A nonzero g with g*f = 0 (side f) or g*(1+f) = 0 (side
 *  complement), re-verified pointwise before it is returned. */
struct AnnihilatorWitness {
  AnnihilatorSide side;
  AnfPoly g;
  int degree;
};

struct AiOptions {
  int max_vars = kMaxAiVars;
  /// Bound-check mode: search annihilators of degree <= degree_cap only.
  /// Lets n grow to ~24 when the caller just needs AI >= cap+1.
  std::optional<int> degree_cap;
};

struct AiResult {
  /// Exact AI when `exact`, otherwise the proven lower bound cap+1.
  int value;
  bool exact;
  std::optional<AnnihilatorWitness> witness;  // present iff exact
};

/// Smallest d admitting a nonzero annihilator of the chosen side, with a
/// verified witness.  Degenerate empty support reports degree 0 with g=1;
/// a constant-1 side is rejected (no nonzero annihilator exists at all).
std::pair<int, AnnihilatorWitness> min_annihilator_degree(const TruthTable& f,
                                                          AnnihilatorSide side);

/// Min over both sides; always <= ceil(n/2) when exact.
AiResult algebraic_immunity(const TruthTable& f, const AiOptions& options = {});

/// min(2 AI, min over 1 <= deg g < AI of deg g + deg(f g)).
int fast_algebraic_immunity(const TruthTable& f, int max_vars = kMaxFaiVars);

/// min AI over all restrictions of the given variables (1-based); a lower
/// bound on AI(f) by the sub-function decomposition.
int ai_lower_bound_subfunctions(const TruthTable& f, const std::vector<int>& split_vars,
                                const AiOptions& options = {});

}  // namespace bft
