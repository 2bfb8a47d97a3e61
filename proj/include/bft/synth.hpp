#pragma once

#include "bft/constructions.hpp"
#include "bft/netlist.hpp"

namespace bft {

/// Linear-size majority circuit: a carry-save full-adder counting tree
/// (2 XOR + 2 AND + 1 OR per full adder) into a constant-threshold
/// comparator.  n = 1 is a bare wire.
Netlist synth_majority(int n);

/// Circuit for any parameterized family except step/iter: parity chains,
/// the MM inner product (psi is pure wiring), the fixed f5 block
/// (7 XOR + 4 AND), and for the iterated families 8 XOR + 4 AND per round
/// plus a final 2 XOR + 1 AND multiplexer.
Netlist synth_construction(const ConstructionParams& p);

/// Step applied to two seed circuits over the same inputs; adds exactly
/// 8 XOR + 4 AND and three inputs per round, then the final multiplexer.
Netlist synth_iter(const Netlist& g, const Netlist& h, int t);

}  // namespace bft
