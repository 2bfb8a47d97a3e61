#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bft/truth_table.hpp"

namespace bft {

enum class GateOp { XOR, AND, OR, NAND };

std::string gate_op_name(GateOp op);

/// Reference to an input (0-based) or an earlier gate (0-based).
struct Ref {
  bool is_gate = false;
  uint32_t index = 0;

  static Ref input(uint32_t i) { return {false, i}; }
  static Ref gate(uint32_t g) { return {true, g}; }
  bool operator==(const Ref& other) const = default;
};

struct Gate {
  GateOp op;
  Ref a, b;
};

struct GateCount {
  uint64_t xor_gates = 0;
  uint64_t and_gates = 0;
  uint64_t or_gates = 0;
  uint64_t nand_gates = 0;

  uint64_t total() const { return xor_gates + and_gates + or_gates + nand_gates; }
  bool operator==(const GateCount& other) const = default;
};

/*! \brief Topologically ordered single-output circuit of 2-input gates.
 *
 * Every gate may only reference inputs or earlier gates; unused gates are
 * forbidden (validate() enforces both).  Immutable after construction.
 */
class Netlist {
public:
  Netlist(int num_inputs, std::vector<Gate> gates, Ref output);

  int num_inputs() const { return num_inputs_; }
  const std::vector<Gate>& gates() const { return gates_; }
  Ref output() const { return output_; }

  /// Throws std::invalid_argument on topology violations or unused gates.
  void validate() const;

  GateCount count_gates() const;

  /// Single-point evaluation; the point spans ceil(n/64) words, LSB-first.
  bool simulate(std::span<const uint64_t> point) const;

  /// 64 assignments at once: lane b of input_lanes[i] is input i of
  /// assignment b.  Returns the 64 output bits.
  uint64_t simulate_block(std::span<const uint64_t> input_lanes) const;

private:
  int num_inputs_;
  std::vector<Gate> gates_;
  Ref output_;
};

/// Text form:  ".inputs x1 ... xn", one "g<id> = <OP> <ref> <ref>" line per
/// gate in topological order, then ".output <ref>".
std::string to_text(const Netlist& nl);
Netlist netlist_from_text(const std::string& text);
Netlist read_netlist_file(const std::string& path);
void write_netlist_file(const std::string& path, const Netlist& nl);

enum class VerifyMode { exhaustive, sampled };

struct EquivalenceCertificate {
  VerifyMode mode;
  uint64_t points_checked = 0;
  bool pass = false;
  std::optional<std::vector<uint64_t>> counterexample;  // point words

  std::string to_string() const;
};

/// Compares all 2^n points (n capped by the table anyway).
EquivalenceCertificate verify_equivalence_exhaustive(const Netlist& nl,
                                                     const TruthTable& f);

/// k seeded random points against a reference evaluator.
template <typename EvalFn>
EquivalenceCertificate verify_equivalence_sampled(const Netlist& nl, EvalFn&& reference,
                                                  uint64_t samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = nl.num_inputs();
  const size_t words = (n + 63) / 64;
  EquivalenceCertificate cert{VerifyMode::sampled, 0, true, std::nullopt};
  std::vector<uint64_t> point(words);
  for (uint64_t s = 0; s < samples; ++s) {
    for (size_t w = 0; w < words; ++w) point[w] = rng();
    if (n % 64 != 0) point.back() &= (uint64_t{1} << (n % 64)) - 1;
    ++cert.points_checked;
    if (nl.simulate(point) != reference(std::span<const uint64_t>(point))) {
      cert.pass = false;
      cert.counterexample = point;
      break;
    }
  }
  return cert;
}

EquivalenceCertificate verify_equivalence_sampled(const Netlist& nl, const TruthTable& f,
                                                  uint64_t samples, uint64_t seed);

}  // namespace bft
