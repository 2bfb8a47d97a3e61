#include "bft/netlist.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bft {

std::string gate_op_name(GateOp op) {
  switch (op) {
    case GateOp::XOR: return "XOR";
    case GateOp::AND: return "AND";
    case GateOp::OR: return "OR";
    case GateOp::NAND: return "NAND";
  }
  return "?";
}

namespace {

std::optional<GateOp> gate_op_from_name(const std::string& s) {
  if (s == "XOR") return GateOp::XOR;
  if (s == "AND") return GateOp::AND;
  if (s == "OR") return GateOp::OR;
  if (s == "NAND") return GateOp::NAND;
  return std::nullopt;
}

uint64_t apply_op(GateOp op, uint64_t a, uint64_t b) {
  switch (op) {
    case GateOp::XOR: return a ^ b;
    case GateOp::AND: return a & b;
    case GateOp::OR: return a | b;
    case GateOp::NAND: return ~(a & b);
  }
  return 0;
}

}  // namespace

Netlist::Netlist(int num_inputs, std::vector<Gate> gates, Ref output)
    : num_inputs_(num_inputs), gates_(std::move(gates)), output_(output) {
  validate();
}

void Netlist::validate() const {
  if (num_inputs_ < 1) throw std::invalid_argument("netlist needs at least one input");
  auto check_ref = [&](Ref r, size_t gate_pos) {
    if (r.is_gate) {
      if (r.index >= gate_pos) {
        throw std::invalid_argument("gate reference breaks topological order");
      }
    } else if (r.index >= static_cast<uint32_t>(num_inputs_)) {
      throw std::invalid_argument("input reference out of range");
    }
  };
  std::vector<bool> used(gates_.size(), false);
  for (size_t i = 0; i < gates_.size(); ++i) {
    check_ref(gates_[i].a, i);
    check_ref(gates_[i].b, i);
    if (gates_[i].a.is_gate) used[gates_[i].a.index] = true;
    if (gates_[i].b.is_gate) used[gates_[i].b.index] = true;
  }
  check_ref(output_, gates_.size());
  if (output_.is_gate) used[output_.index] = true;
  for (size_t i = 0; i < gates_.size(); ++i) {
    if (!used[i]) {
      throw std::invalid_argument("unused gate g" + std::to_string(i + 1));
    }
  }
}

GateCount Netlist::count_gates() const {
  GateCount c;
  for (const Gate& g : gates_) {
    switch (g.op) {
      case GateOp::XOR: ++c.xor_gates; break;
      case GateOp::AND: ++c.and_gates; break;
      case GateOp::OR: ++c.or_gates; break;
      case GateOp::NAND: ++c.nand_gates; break;
    }
  }
  return c;
}

uint64_t Netlist::simulate_block(std::span<const uint64_t> input_lanes) const {
  if (input_lanes.size() != static_cast<size_t>(num_inputs_)) {
    throw std::invalid_argument("assignment does not cover all inputs");
  }
  std::vector<uint64_t> lanes(gates_.size());
  auto value = [&](Ref r) { return r.is_gate ? lanes[r.index] : input_lanes[r.index]; };
  for (size_t i = 0; i < gates_.size(); ++i) {
    lanes[i] = apply_op(gates_[i].op, value(gates_[i].a), value(gates_[i].b));
  }
  return value(output_);
}

bool Netlist::simulate(std::span<const uint64_t> point) const {
  if (point.size() < (static_cast<size_t>(num_inputs_) + 63) / 64) {
    throw std::invalid_argument("assignment does not cover all inputs");
  }
  std::vector<uint64_t> lanes(num_inputs_);
  for (int i = 0; i < num_inputs_; ++i) {
    lanes[i] = (point[i >> 6] >> (i & 63)) & 1 ? ~uint64_t{0} : 0;
  }
  return simulate_block(lanes) & 1;
}

std::string to_text(const Netlist& nl) {
  std::ostringstream out;
  out << ".inputs";
  for (int i = 1; i <= nl.num_inputs(); ++i) out << " x" << i;
  out << "\n";
  auto ref_name = [](Ref r) {
    return r.is_gate ? "g" + std::to_string(r.index + 1) : "x" + std::to_string(r.index + 1);
  };
  for (size_t i = 0; i < nl.gates().size(); ++i) {
    const Gate& g = nl.gates()[i];
    out << "g" << i + 1 << " = " << gate_op_name(g.op) << " " << ref_name(g.a) << " "
        << ref_name(g.b) << "\n";
  }
  out << ".output " << ref_name(nl.output()) << "\n";
  return out.str();
}

namespace {

Ref parse_ref(const std::string& tok, int num_inputs, size_t gates_so_far, int line_no) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("netlist line " + std::to_string(line_no) + ": " + why);
  };
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'g')) fail("bad reference '" + tok + "'");
  uint64_t id = 0;
  try {
    id = std::stoull(tok.substr(1));
  } catch (const std::exception&) {
    fail("bad reference '" + tok + "'");
  }
  if (id == 0) fail("references are 1-based");
  if (tok[0] == 'x') {
    if (id > static_cast<uint64_t>(num_inputs)) fail("input out of range");
    return Ref::input(static_cast<uint32_t>(id - 1));
  }
  if (id > gates_so_far) fail("gate reference ahead of its definition");
  return Ref::gate(static_cast<uint32_t>(id - 1));
}

}  // namespace

Netlist netlist_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int num_inputs = -1;
  std::vector<Gate> gates;
  std::optional<Ref> output;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == ".inputs") {
      int count = 0;
      std::string tok;
      while (ls >> tok) ++count;
      if (count < 1) {
        throw std::invalid_argument("netlist line " + std::to_string(line_no) +
                                    ": .inputs needs at least one name");
      }
      num_inputs = count;
    } else if (head == ".output") {
      std::string tok;
      if (!(ls >> tok) || num_inputs < 0) {
        throw std::invalid_argument("netlist line " + std::to_string(line_no) +
                                    ": malformed .output");
      }
      output = parse_ref(tok, num_inputs, gates.size(), line_no);
    } else {
      if (num_inputs < 0) {
        throw std::invalid_argument("netlist line " + std::to_string(line_no) +
                                    ": gate before .inputs");
      }
      std::string eq, opname, ta, tb;
      if (!(ls >> eq >> opname >> ta >> tb) || eq != "=") {
        throw std::invalid_argument("netlist line " + std::to_string(line_no) +
                                    ": malformed gate");
      }
      const auto op = gate_op_from_name(opname);
      if (!op) {
        throw std::invalid_argument("netlist line " + std::to_string(line_no) +
                                    ": unknown op '" + opname + "'");
      }
      if (head != "g" + std::to_string(gates.size() + 1)) {
        throw std::invalid_argument("netlist line " + std::to_string(line_no) +
                                    ": gates must be named g1, g2, ... in order");
      }
      const Ref a = parse_ref(ta, num_inputs, gates.size(), line_no);
      const Ref b = parse_ref(tb, num_inputs, gates.size(), line_no);
      gates.push_back({*op, a, b});
    }
  }
  if (num_inputs < 0 || !output) {
    throw std::invalid_argument("netlist text needs .inputs and .output");
  }
  return Netlist(num_inputs, std::move(gates), *output);
}

Netlist read_netlist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open netlist file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return netlist_from_text(buf.str());
}

void write_netlist_file(const std::string& path, const Netlist& nl) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write netlist file " + path);
  out << to_text(nl);
}

std::string EquivalenceCertificate::to_string() const {
  std::string s = "mode = ";
  s += mode == VerifyMode::exhaustive ? "exhaustive" : "sampled";
  s += "\npoints = " + std::to_string(points_checked);
  s += "\nresult = ";
  s += pass ? "pass" : "fail";
  if (counterexample) {
    s += "\ncounterexample = 0x";
    char buf[17];
    for (auto it = counterexample->rbegin(); it != counterexample->rend(); ++it) {
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*it));
      s += buf;
    }
  }
  s += "\n";
  return s;
}

EquivalenceCertificate verify_equivalence_exhaustive(const Netlist& nl,
                                                     const TruthTable& f) {
  if (nl.num_inputs() != f.vars()) {
    throw std::invalid_argument("input counts differ between netlist and function");
  }
  const int n = f.vars();
  EquivalenceCertificate cert{VerifyMode::exhaustive, 0, true, std::nullopt};
  std::vector<uint64_t> lanes(n);
  static constexpr uint64_t kPattern[6] = {
      0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
      0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL};
  const uint64_t blocks = (f.size() + 63) / 64;
  for (uint64_t blk = 0; blk < blocks; ++blk) {
    const uint64_t base = blk * 64;
    for (int i = 0; i < n; ++i) {
      lanes[i] = i < 6 ? kPattern[i] : ((base >> i) & 1 ? ~uint64_t{0} : 0);
    }
    uint64_t got = nl.simulate_block(lanes);
    uint64_t want = f.words()[blk];
    const uint64_t valid =
        f.size() - base >= 64 ? ~uint64_t{0} : (uint64_t{1} << (f.size() - base)) - 1;
    cert.points_checked += std::popcount(valid);
    if ((got ^ want) & valid) {
      const int bad = std::countr_zero((got ^ want) & valid);
      cert.pass = false;
      cert.counterexample = std::vector<uint64_t>{base + bad};
      break;
    }
  }
  return cert;
}

EquivalenceCertificate verify_equivalence_sampled(const Netlist& nl, const TruthTable& f,
                                                  uint64_t samples, uint64_t seed) {
  if (nl.num_inputs() != f.vars()) {
    throw std::invalid_argument("input counts differ between netlist and function");
  }
  return verify_equivalence_sampled(
      nl, [&](std::span<const uint64_t> p) { return f.bit(p[0]); }, samples, seed);
}

}  // namespace bft
