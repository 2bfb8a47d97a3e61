#include "bft/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>

#include "bft/constructions.hpp"
#include "bft/io.hpp"
#include "bft/netlist.hpp"
#include "bft/report.hpp"
#include "bft/synth.hpp"

namespace bft {

namespace {

struct PsiSpec {
  std::string text = "identity";

  // Resolved against the block size the construction needs.
  BitPermutation resolve(int k, std::ostream& out) const {
    if (text.empty() || text == "identity") return BitPermutation::identity(k);
    if (text.rfind("random:", 0) == 0) {
      const uint64_t seed = std::stoull(text.substr(7));
      const BitPermutation psi = BitPermutation::shuffled(k, seed);
      out << "psi_seed = " << seed << "\n";
      return psi;
    }
    std::vector<int> image;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) image.push_back(std::stoi(tok));
    if (static_cast<int>(image.size()) != k) {
      throw std::invalid_argument("psi lists " + std::to_string(image.size()) +
                                  " entries, construction needs " + std::to_string(k));
    }
    return BitPermutation::from_image(std::move(image));
  }
};

void echo_psi(const BitPermutation& psi, std::ostream& out) {
  out << "psi =";
  for (int j = 1; j <= psi.size(); ++j) out << " " << psi.image(j);
  out << "\n";
}

// Block size of the MM core, if the family has one.
std::optional<int> mm_block_size(const ConstructionParams& p) {
  switch (p.family) {
    case Family::mm: return p.k;
    case Family::thm_even: return (p.n - p.m - 1) / 2;
    case Family::thm_odd: return (p.n - p.m - 4) / 2;
    case Family::gencons1: return (p.n - 3 * p.t - 2) / 2;
    case Family::gencons2: return (p.n - 3 * p.t - 5) / 2;
    default: return std::nullopt;
  }
}

struct FamilyFlags {
  std::string family;
  int n = 0, m = 0, t = 0, k = 0;
  std::string psi = "identity";
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family, "maj|mm|f5|thm-even|thm-odd|step|iter|gencons1|gencons2")
      ->required();
  cmd->add_option("--n", f.n, "variable count");
  cmd->add_option("--m", f.m, "resiliency order (thm-even, thm-odd)");
  cmd->add_option("--t", f.t, "iteration rounds (gencons1, gencons2, iter)");
  cmd->add_option("--k", f.k, "MM block size (mm)");
  cmd->add_option("--psi", f.psi, "identity | random:<seed> | comma image list");
}

ConstructionParams resolve_params(const FamilyFlags& f, std::ostream& out) {
  const auto family = family_from_name(f.family);
  if (!family) throw std::invalid_argument("unknown family '" + f.family + "'");
  ConstructionParams p;
  p.family = *family;
  p.n = f.n;
  p.m = f.m;
  p.t = f.t;
  p.k = f.k;
  if (const auto k = mm_block_size(p)) {
    if (*k < 2) throw std::invalid_argument("parameters give MM block size k < 2");
    PsiSpec spec{f.psi};
    const BitPermutation psi = spec.resolve(*k, out);
    echo_psi(psi, out);
    p.psi = psi;
  }
  return p;
}

int cmd_construct(const FamilyFlags& flags, const std::string& output,
                  const std::string& seed_g, const std::string& seed_h,
                  const std::string& output_h, bool msb_first, int max_vars,
                  std::ostream& out) {
  const auto family = family_from_name(flags.family);
  if (!family) throw std::invalid_argument("unknown family '" + flags.family + "'");
  if (*family == Family::step || *family == Family::iter) {
    if (seed_g.empty() || seed_h.empty()) {
      throw std::invalid_argument("step/iter need --seed-g and --seed-h function files");
    }
    const TruthTable g = read_function_file(seed_g, msb_first, max_vars);
    const TruthTable h = read_function_file(seed_h, msb_first, max_vars);
    if (*family == Family::step) {
      if (output_h.empty()) {
        throw std::invalid_argument("step emits two functions; add --output-h");
      }
      const auto [big_g, big_h] = step(g, h, max_vars);
      write_function_file(output, big_g, msb_first);
      write_function_file(output_h, big_h, msb_first);
      out << "n = " << big_g.vars() << "\n";
      out << "wrote " << output << "\n";
      out << "wrote " << output_h << "\n";
      return 0;
    }
    const TruthTable f = iter(g, h, flags.t, max_vars);
    write_function_file(output, f, msb_first);
    out << "n = " << f.vars() << "\n";
    out << "wrote " << output << "\n";
    return 0;
  }
  const ConstructionParams p = resolve_params(flags, out);
  const TruthTable f = build(p, max_vars);
  write_function_file(output, f, msb_first);
  out << "n = " << f.vars() << "\n";
  out << "wrote " << output << "\n";
  return 0;
}

int cmd_analyze(const std::string& path, bool with_ai, bool with_fai,
                std::optional<int> ai_cap, int ai_max_n, bool msb_first, int max_vars,
                std::ostream& out) {
  const TruthTable f = read_function_file(path, msb_first, max_vars);
  AnalyzeOptions options;
  options.with_ai = with_ai || with_fai;
  options.with_fai = with_fai;
  options.ai_degree_cap = ai_cap;
  options.ai_max_vars = ai_max_n;
  out << report_text(analyze(f, options));
  return 0;
}

void print_case(const CaseResult& c, std::ostream& out) {
  out << "case " << c.case_id << ": n = " << c.n << ", m = " << c.m << ", x = " << c.x
      << ", a = " << c.a;
  if (c.t >= 0) out << ", t = " << c.t;
  out << "\n";
}

void print_case_csv(int m0, int x0, int a0, const CaseResult& c, std::ostream& out) {
  out << m0 << "," << x0 << "," << a0 << "," << c.case_id << "," << c.n << "," << c.m
      << "," << c.x << "," << c.a << ",";
  if (c.t >= 0) out << c.t;
  out << "\n";
}

int cmd_solve(int m0, int x0, int a0, const std::string& which_case,
              const std::string& emit, const std::string& psi, bool csv, bool msb_first,
              int max_vars, std::ostream& out) {
  const TradeoffSolution s = solve_tradeoff(m0, x0, a0);
  int only = 0;
  if (which_case != "all") {
    only = std::stoi(which_case);
    if (only < 1 || only > 4) throw std::invalid_argument("--case takes all|1|2|3|4");
  }
  if (csv) {
    out << "m0,x0,a0,case,n,m,x,a,t\n";
    for (const CaseResult& c : s.cases) {
      if (only == 0 || c.case_id == only) print_case_csv(m0, x0, a0, c, out);
    }
  } else {
    out << "m0 = " << m0 << "\nx0 = " << x0 << "\na0 = " << a0 << "\n";
    for (const CaseResult& c : s.cases) {
      if (only == 0 || c.case_id == only) print_case(c, out);
    }
    out << "selected = " << s.selected << "\n";
    out << "gate_lower_bound = " << gate_lower_bound(m0, x0, a0) << "\n";
  }
  if (!emit.empty()) {
    const CaseResult& chosen = s.cases[(only == 0 ? s.selected : only) - 1];
    std::optional<BitPermutation> resolved;
    if (const auto k = mm_block_size(
            {chosen.case_id == 1   ? Family::thm_even
             : chosen.case_id == 2 ? Family::thm_odd
             : chosen.case_id == 3 ? Family::gencons1
                                   : Family::gencons2,
             chosen.n, chosen.m, chosen.t, 0, std::nullopt})) {
      PsiSpec spec{psi};
      resolved = spec.resolve(*k, out);
      echo_psi(*resolved, out);
    }
    const TruthTable f = build_case_function(chosen, resolved);
    (void)max_vars;
    write_function_file(emit, f, msb_first);
    out << "emitted_case = " << chosen.case_id << "\n";
    out << "wrote " << emit << "\n";
  }
  return 0;
}

int cmd_table1(bool csv, std::ostream& out) {
  const auto targets = tradeoff_targets();
  if (csv) out << "m0,x0,a0,case,n,m,x,a,t\n";
  for (const auto& target : targets) {
    const TradeoffSolution s = solve_tradeoff(target[0], target[1], target[2]);
    if (csv) {
      for (const CaseResult& c : s.cases) print_case_csv(target[0], target[1], target[2], c, out);
    } else {
      out << "target (" << target[0] << "," << target[1] << "," << target[2] << "):";
      for (const CaseResult& c : s.cases) {
        out << "  case" << c.case_id << " (" << c.n << "," << c.m << "," << c.x << ","
            << c.a << ")";
      }
      out << "\n";
    }
  }
  return 0;
}

int cmd_netlist(const FamilyFlags& flags, const std::string& output, std::ostream& out) {
  const ConstructionParams p = resolve_params(flags, out);
  const Netlist nl = synth_construction(p);
  write_netlist_file(output, nl);
  const GateCount c = nl.count_gates();
  out << "inputs = " << nl.num_inputs() << "\n";
  out << "xor = " << c.xor_gates << "\n";
  out << "and = " << c.and_gates << "\n";
  out << "or = " << c.or_gates << "\n";
  out << "nand = " << c.nand_gates << "\n";
  out << "total = " << c.total() << "\n";
  out << "wrote " << output << "\n";
  return 0;
}

int cmd_verify(const std::string& netlist_path, const std::string& function_path,
               const std::string& mode, uint64_t samples, uint64_t seed, bool msb_first,
               int max_vars, std::ostream& out) {
  const Netlist nl = read_netlist_file(netlist_path);
  const TruthTable f = read_function_file(function_path, msb_first, max_vars);
  EquivalenceCertificate cert;
  if (mode == "exhaustive") {
    if (f.vars() > 20) {
      throw std::invalid_argument("exhaustive mode is capped at n <= 20; use sampled");
    }
    cert = verify_equivalence_exhaustive(nl, f);
  } else if (mode == "sampled") {
    out << "seed = " << seed << "\n";
    cert = verify_equivalence_sampled(nl, f, samples, seed);
  } else {
    throw std::invalid_argument("--mode takes exhaustive|sampled");
  }
  out << cert.to_string();
  return cert.pass ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resilient Boolean function construction and verification toolkit"};
  app.require_subcommand(1);

  int max_vars = kMaxTableVars;
  app.add_option("--max-n", max_vars, "truth-table size ceiling (variables)");

  FamilyFlags construct_flags;
  std::string construct_out, seed_g, seed_h, output_h;
  bool construct_msb = false;
  auto* construct = app.add_subcommand("construct", "build a family instance");
  add_family_flags(construct, construct_flags);
  construct->add_option("-o,--output", construct_out, "function file to write")->required();
  construct->add_option("--seed-g", seed_g, "seed function file (step/iter)");
  construct->add_option("--seed-h", seed_h, "seed function file (step/iter)");
  construct->add_option("--output-h", output_h, "second output file (step)");
  construct->add_flag("--msb-first", construct_msb, "file I/O in MSB-first convention");

  std::string analyze_path;
  bool with_ai = false, with_fai = false, analyze_msb = false;
  int ai_cap = -1;
  int ai_max_n = kMaxAiVars;
  auto* analyze_cmd = app.add_subcommand("analyze", "report all properties of a function file");
  analyze_cmd->add_option("file", analyze_path, "function file")->required();
  analyze_cmd->add_flag("--ai", with_ai, "compute algebraic immunity with witness");
  analyze_cmd->add_option("--ai-cap", ai_cap, "bound-check mode: search degree cap");
  analyze_cmd->add_option("--ai-max-n", ai_max_n, "exact-AI variable ceiling");
  analyze_cmd->add_flag("--fai", with_fai, "compute fast algebraic immunity");
  analyze_cmd->add_flag("--msb-first", analyze_msb, "file I/O in MSB-first convention");

  int m0 = 0, x0 = 1, a0 = 1;
  std::string which_case = "all", emit_path, solve_psi = "identity";
  bool solve_csv = false, solve_msb = false;
  auto* solve = app.add_subcommand("solve", "minimal n per construction for target (m0,x0,a0)");
  solve->add_option("--m0", m0, "resiliency target")->required();
  solve->add_option("--x0", x0, "linear-bias exponent target")->required();
  solve->add_option("--a0", a0, "algebraic-immunity target")->required();
  solve->add_option("--case", which_case, "all|1|2|3|4");
  solve->add_option("--emit", emit_path, "write the selected case's function");
  solve->add_option("--psi", solve_psi, "psi for the emitted function");
  solve->add_flag("--csv", solve_csv, "CSV output");
  solve->add_flag("--msb-first", solve_msb, "file I/O in MSB-first convention");

  bool table_csv = false;
  auto* table = app.add_subcommand("table1", "the twelve reference trade-off rows");
  table->add_flag("--csv", table_csv, "CSV output");

  FamilyFlags netlist_flags;
  std::string netlist_out;
  auto* netlist_cmd = app.add_subcommand("netlist", "compile a family instance to gates");
  add_family_flags(netlist_cmd, netlist_flags);
  netlist_cmd->add_option("-o,--output", netlist_out, "netlist file to write")->required();

  std::string verify_netlist, verify_function, verify_mode = "exhaustive";
  uint64_t samples = 10000, sample_seed = 1;
  bool verify_msb = false;
  auto* verify = app.add_subcommand("verify", "certify netlist/function equivalence");
  verify->add_option("--netlist", verify_netlist, "netlist file")->required();
  verify->add_option("--function", verify_function, "function file")->required();
  verify->add_option("--mode", verify_mode, "exhaustive|sampled");
  verify->add_option("--samples", samples, "sampled mode point count");
  verify->add_option("--seed", sample_seed, "sampled mode RNG seed");
  verify->add_flag("--msb-first", verify_msb, "file I/O in MSB-first convention");

  std::vector<const char*> argv;
  argv.push_back("bft");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    set_max_table_vars(max_vars);
    if (construct->parsed()) {
      return cmd_construct(construct_flags, construct_out, seed_g, seed_h, output_h,
                           construct_msb, max_vars, out);
    }
    if (analyze_cmd->parsed()) {
      return cmd_analyze(analyze_path, with_ai, with_fai,
                         ai_cap >= 0 ? std::optional<int>(ai_cap) : std::nullopt,
                         ai_max_n, analyze_msb, max_vars, out);
    }
    if (solve->parsed()) {
      return cmd_solve(m0, x0, a0, which_case, emit_path, solve_psi, solve_csv, solve_msb,
                       max_vars, out);
    }
    if (table->parsed()) return cmd_table1(table_csv, out);
    if (netlist_cmd->parsed()) return cmd_netlist(netlist_flags, netlist_out, out);
    if (verify->parsed()) {
      return cmd_verify(verify_netlist, verify_function, verify_mode, samples, sample_seed,
                        verify_msb, max_vars, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace bft
