#pragma once

#include <optional>
#include <string>

#include "bft/immunity.hpp"
#include "bft/truth_table.hpp"
#include "bft/walsh.hpp"

namespace bft {

/// Everything `analyze` derives from one function; internally consistent
/// since all spectral fields come from a single transform.
struct PropertyReport {
  int n = 0;
  uint64_t weight = 0;
  bool balanced = false;
  uint64_t nonlinearity = 0;
  DyadicRational linear_bias;
  int resiliency_order = -1;
  int degree = 0;
  bool bent = false;
  bool almost_optimal_lb = false;
  /// Divisibility exponent verified against the spectrum, when the
  /// resiliency/degree preconditions apply.
  std::optional<int> divisibility_exponent_checked;
  std::optional<AiResult> ai;
  std::optional<int> fai;
};

struct AnalyzeOptions {
  bool with_ai = false;
  bool with_fai = false;
  std::optional<int> ai_degree_cap;
  int ai_max_vars = kMaxAiVars;
  int fai_max_vars = kMaxFaiVars;
};

PropertyReport analyze(const TruthTable& f, const AnalyzeOptions& options = {});

/// "key = value" lines, one per populated field.
std::string report_text(const PropertyReport& report);

}  // namespace bft
