#include "bft/report.hpp"

#include <sstream>
#include <stdexcept>

namespace bft {

PropertyReport analyze(const TruthTable& f, const AnalyzeOptions& options) {
  PropertyReport r;
  r.n = f.vars();
  r.weight = f.weight();
  r.balanced = f.is_balanced();
  const WalshSpectrum spectrum = walsh_transform(f);
  r.nonlinearity = nonlinearity(spectrum);
  r.linear_bias = linear_bias(spectrum);
  r.resiliency_order = resiliency_order(spectrum);
  r.degree = mobius(f).degree();
  r.bent = is_bent(spectrum);
  r.almost_optimal_lb = almost_optimal_lb(spectrum);
  if (r.resiliency_order >= 0 && r.resiliency_order <= r.n - 2 && r.degree >= 1) {
    if (!divisibility_check(spectrum, r.resiliency_order, r.degree)) {
      throw std::logic_error("divisibility theorem violated; spectral analyzer broken");
    }
    r.divisibility_exponent_checked =
        r.resiliency_order + 2 + (r.n - r.resiliency_order - 2) / r.degree;
  }
  if (options.with_ai || options.with_fai) {
    AiOptions ai_opts;
    ai_opts.max_vars = options.ai_max_vars;
    ai_opts.degree_cap = options.ai_degree_cap;
    r.ai = algebraic_immunity(f, ai_opts);
  }
  if (options.with_fai) {
    r.fai = fast_algebraic_immunity(f, options.fai_max_vars);
  }
  return r;
}

std::string report_text(const PropertyReport& r) {
  std::ostringstream out;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "n = " << r.n << "\n";
  out << "weight = " << r.weight << "\n";
  out << "balanced = " << flag(r.balanced) << "\n";
  out << "nonlinearity = " << r.nonlinearity << "\n";
  out << "linear_bias = " << r.linear_bias.to_string() << "\n";
  out << "resiliency_order = " << r.resiliency_order << "\n";
  out << "degree = " << r.degree << "\n";
  out << "bent = " << flag(r.bent) << "\n";
  out << "almost_optimal_lb = " << flag(r.almost_optimal_lb) << "\n";
  out << "divisibility_exponent_checked = ";
  if (r.divisibility_exponent_checked) {
    out << *r.divisibility_exponent_checked << "\n";
  } else {
    out << "none\n";
  }
  if (r.ai) {
    if (r.ai->exact) {
      out << "ai = " << r.ai->value << "\n";
      if (r.ai->witness) {
        out << "ai_witness_side = "
            << (r.ai->witness->side == AnnihilatorSide::f ? "f" : "complement") << "\n";
        out << "ai_witness = " << to_string(r.ai->witness->g) << "\n";
      }
    } else {
      out << "ai_lower_bound = " << r.ai->value << "\n";
    }
  }
  if (r.fai) out << "fai = " << *r.fai << "\n";
  return out.str();
}

}  // namespace bft
