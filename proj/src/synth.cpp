#include "bft/synth.hpp"

#include <deque>
#include <stdexcept>

namespace bft {

namespace {

// Wire-or-constant value during synthesis; constants are folded away so
// the finished netlist never contains constant gates.
struct Val {
  enum Kind { kZero, kOne, kWire } kind = kZero;
  Ref ref{};

  static Val zero() { return {kZero, {}}; }
  static Val one() { return {kOne, {}}; }
  static Val wire(Ref r) { return {kWire, r}; }
};

class Builder {
public:
  explicit Builder(int num_inputs) : num_inputs_(num_inputs) {}

  int add_input() { return num_inputs_++; }
  Val input(int i) const { return Val::wire(Ref::input(static_cast<uint32_t>(i))); }

  Val bnot(Val a) {
    if (a.kind == Val::kZero) return Val::one();
    if (a.kind == Val::kOne) return Val::zero();
    return emit(GateOp::NAND, a.ref, a.ref);
  }

  Val bxor(Val a, Val b) {
    if (a.kind == Val::kZero) return b;
    if (b.kind == Val::kZero) return a;
    if (a.kind == Val::kOne) return bnot(b);
    if (b.kind == Val::kOne) return bnot(a);
    return emit(GateOp::XOR, a.ref, b.ref);
  }

  Val band(Val a, Val b) {
    if (a.kind == Val::kZero || b.kind == Val::kZero) return Val::zero();
    if (a.kind == Val::kOne) return b;
    if (b.kind == Val::kOne) return a;
    return emit(GateOp::AND, a.ref, b.ref);
  }

  Val bor(Val a, Val b) {
    if (a.kind == Val::kOne || b.kind == Val::kOne) return Val::one();
    if (a.kind == Val::kZero) return b;
    if (b.kind == Val::kZero) return a;
    return emit(GateOp::OR, a.ref, b.ref);
  }

  Val bnand(Val a, Val b) { return bnot(band(a, b)); }

  /// Copies a finished netlist's gates over this builder's inputs.
  Val absorb(const Netlist& nl) {
    if (nl.num_inputs() > num_inputs_) {
      throw std::invalid_argument("absorbed netlist wants more inputs");
    }
    std::vector<Ref> mapped(nl.gates().size());
    auto remap = [&](Ref r) { return r.is_gate ? mapped[r.index] : r; };
    for (size_t i = 0; i < nl.gates().size(); ++i) {
      const Gate& g = nl.gates()[i];
      mapped[i] = emit(g.op, remap(g.a), remap(g.b)).ref;
    }
    return Val::wire(remap(nl.output()));
  }

  /// Drops gates unreachable from the output and renumbers.
  Netlist finish(Val out) {
    if (out.kind != Val::kWire) {
      throw std::invalid_argument("constant function has no gate realization here");
    }
    std::vector<bool> live(gates_.size(), false);
    if (out.ref.is_gate) {
      live[out.ref.index] = true;
      for (size_t i = gates_.size(); i-- > 0;) {
        if (!live[i]) continue;
        if (gates_[i].a.is_gate) live[gates_[i].a.index] = true;
        if (gates_[i].b.is_gate) live[gates_[i].b.index] = true;
      }
    }
    std::vector<uint32_t> renum(gates_.size());
    std::vector<Gate> kept;
    for (size_t i = 0; i < gates_.size(); ++i) {
      if (!live[i]) continue;
      renum[i] = static_cast<uint32_t>(kept.size());
      Gate g = gates_[i];
      if (g.a.is_gate) g.a.index = renum[g.a.index];
      if (g.b.is_gate) g.b.index = renum[g.b.index];
      kept.push_back(g);
    }
    Ref out_ref = out.ref;
    if (out_ref.is_gate) out_ref.index = renum[out_ref.index];
    return Netlist(num_inputs_, std::move(kept), out_ref);
  }

private:
  Val emit(GateOp op, Ref a, Ref b) {
    gates_.push_back({op, a, b});
    return Val::wire(Ref::gate(static_cast<uint32_t>(gates_.size() - 1)));
  }

  int num_inputs_;
  std::vector<Gate> gates_;
};

// Full-adder counting tree over the given bits, then count > floor(n/2).
Val emit_majority(Builder& b, const std::vector<Val>& bits) {
  const int n = static_cast<int>(bits.size());
  if (n == 1) return bits[0];
  std::vector<std::deque<Val>> cols(1);
  cols[0].assign(bits.begin(), bits.end());
  std::vector<Val> count;
  for (size_t j = 0; j < cols.size(); ++j) {
    while (cols[j].size() >= 3) {
      const Val x = cols[j].front(); cols[j].pop_front();
      const Val y = cols[j].front(); cols[j].pop_front();
      const Val z = cols[j].front(); cols[j].pop_front();
      const Val p = b.bxor(x, y);
      const Val sum = b.bxor(p, z);
      const Val carry = b.bor(b.band(x, y), b.band(z, p));
      cols[j].push_back(sum);
      if (cols.size() == j + 1) cols.emplace_back();
      cols[j + 1].push_back(carry);
    }
    if (cols[j].size() == 2) {
      const Val x = cols[j].front(); cols[j].pop_front();
      const Val y = cols[j].front(); cols[j].pop_front();
      cols[j].push_back(b.bxor(x, y));
      if (cols.size() == j + 1) cols.emplace_back();
      cols[j + 1].push_back(b.band(x, y));
    }
    count.push_back(cols[j].empty() ? Val::zero() : cols[j].front());
  }
  // count > threshold, MSB first with constant folding
  const int threshold = n / 2;
  Val gt = Val::zero();
  Val eq = Val::one();
  for (int bit = static_cast<int>(count.size()) - 1; bit >= 0; --bit) {
    const bool tbit = (threshold >> bit) & 1;
    if (tbit) {
      eq = b.band(eq, count[bit]);
    } else {
      gt = b.bor(gt, b.band(eq, count[bit]));
      eq = b.band(eq, b.bnot(count[bit]));
    }
  }
  return gt;
}

Val emit_xor_chain(Builder& b, const std::vector<Val>& vals) {
  Val acc = Val::zero();
  for (const Val& v : vals) acc = b.bxor(acc, v);
  return acc;
}

// <psi(X),Y> + Maj(X): k AND, k-1 XOR, the majority tree, one joining XOR.
Val emit_mm(Builder& b, const BitPermutation& psi, int x_base, int y_base) {
  const int k = psi.size();
  std::vector<Val> products;
  for (int j = 1; j <= k; ++j) {
    products.push_back(
        b.band(b.input(x_base + psi.image(j) - 1), b.input(y_base + j - 1)));
  }
  const Val ip = emit_xor_chain(b, products);
  std::vector<Val> x_bits;
  for (int i = 0; i < k; ++i) x_bits.push_back(b.input(x_base + i));
  return b.bxor(ip, emit_majority(b, x_bits));
}

// 7 XOR + 4 AND realization of the displayed form of f5.
Val emit_f5(Builder& b, int base) {
  const Val x1 = b.input(base), x2 = b.input(base + 1);
  const Val z1 = b.input(base + 2), z2 = b.input(base + 3), z3 = b.input(base + 4);
  const Val z13 = b.bxor(z1, z3);
  const Val z23 = b.bxor(z2, z3);
  const Val z12 = b.bxor(z1, z2);
  const Val z123 = b.bxor(z12, z3);
  const Val a1 = b.band(x1, z13);
  const Val a2 = b.band(x2, z23);
  const Val x12 = b.band(x1, x2);
  const Val a3 = b.band(x12, z123);
  return b.bxor(b.bxor(b.bxor(z12, a1), a2), a3);
}

// One resiliency-boosting round over shared inputs; exactly 8 XOR + 4 AND.
// Appends the three new inputs itself and returns the (G, H) wires.
std::pair<Val, Val> emit_step(Builder& b, Val g, Val h) {
  const Val x1 = b.input(b.add_input());
  const Val x2 = b.input(b.add_input());
  const Val x3 = b.input(b.add_input());
  const Val s = b.bxor(x3, x2);
  // G = g + x1 g + x1 h + s  (= (1+x1)g + x1 h + x2 + x3)
  const Val ga = b.band(x1, g);
  const Val gb = b.band(x1, h);
  const Val big_g = b.bxor(b.bxor(b.bxor(g, ga), gb), s);
  // H = g + s g + s h + x1 + x3
  const Val ha = b.band(s, g);
  const Val hb = b.band(s, h);
  const Val big_h = b.bxor(b.bxor(b.bxor(b.bxor(g, ha), hb), x1), x3);
  return {big_g, big_h};
}

// Final concatenation: G + sel (G + H), 2 XOR + 1 AND.
Val emit_mux(Builder& b, Val g, Val h) {
  const Val sel = b.input(b.add_input());
  return b.bxor(g, b.band(sel, b.bxor(g, h)));
}

Val emit_rounds_and_mux(Builder& b, Val g, Val h, int t) {
  for (int i = 0; i < t; ++i) {
    auto [ng, nh] = emit_step(b, g, h);
    g = ng;
    h = nh;
  }
  return emit_mux(b, g, h);
}

}  // namespace

Netlist synth_majority(int n) {
  if (n < 1) throw std::invalid_argument("majority needs n >= 1");
  Builder b(n);
  std::vector<Val> bits;
  for (int i = 0; i < n; ++i) bits.push_back(b.input(i));
  return b.finish(emit_majority(b, bits));
}

Netlist synth_construction(const ConstructionParams& p) {
  switch (p.family) {
    case Family::maj:
      return synth_majority(p.n);
    case Family::mm: {
      if (p.k < 2) throw std::invalid_argument("mm needs k >= 2");
      Builder b(2 * p.k);
      const BitPermutation psi =
          p.psi ? *p.psi : BitPermutation::identity(p.k);
      if (psi.size() != p.k) throw std::invalid_argument("psi size mismatch");
      return b.finish(emit_mm(b, psi, 0, p.k));
    }
    case Family::f5: {
      Builder b(5);
      return b.finish(emit_f5(b, 0));
    }
    case Family::thm_even: {
      const int m = p.m, n = p.n;
      if (m < 0 || n <= m || (n - m) % 2 == 0 || (n - m - 1) / 2 < 2) {
        throw std::invalid_argument("thm_even parameter violation");
      }
      const int k = (n - m - 1) / 2;
      Builder b(n);
      const BitPermutation psi = p.psi ? *p.psi : BitPermutation::identity(k);
      if (psi.size() != k) throw std::invalid_argument("psi size mismatch");
      std::vector<Val> parity;
      for (int i = 0; i <= m; ++i) parity.push_back(b.input(i));
      return b.finish(b.bxor(emit_xor_chain(b, parity), emit_mm(b, psi, m + 1, m + 1 + k)));
    }
    case Family::thm_odd: {
      const int m = p.m, n = p.n;
      if (m < 1 || n < m + 4 || (n - m) % 2 != 0 || (n - m - 4) / 2 < 2) {
        throw std::invalid_argument("thm_odd parameter violation");
      }
      const int k = (n - m - 4) / 2;
      Builder b(n);
      const BitPermutation psi = p.psi ? *p.psi : BitPermutation::identity(k);
      if (psi.size() != k) throw std::invalid_argument("psi size mismatch");
      std::vector<Val> parity;
      for (int i = 0; i + 1 < m; ++i) parity.push_back(b.input(i));
      const Val tail = b.bxor(emit_f5(b, m - 1), emit_mm(b, psi, m + 4, m + 4 + k));
      return b.finish(b.bxor(emit_xor_chain(b, parity), tail));
    }
    case Family::gencons1: {
      const int seed_vars = p.n - 3 * p.t - 1;
      if (p.t < 0 || seed_vars < 3 || seed_vars % 2 == 0 || (seed_vars - 1) / 2 < 2) {
        throw std::invalid_argument("gencons1 parameter violation");
      }
      const int k = (seed_vars - 1) / 2;
      Builder b(seed_vars);
      const BitPermutation psi = p.psi ? *p.psi : BitPermutation::identity(k);
      if (psi.size() != k) throw std::invalid_argument("psi size mismatch");
      const Val g0 = b.bxor(b.input(0), emit_mm(b, psi, 1, 1 + k));
      const Val h0 = b.bnot(g0);
      return b.finish(emit_rounds_and_mux(b, g0, h0, p.t));
    }
    case Family::gencons2: {
      const int seed_vars = p.n - 3 * p.t - 1;
      if (p.t < 0 || seed_vars < 4 || seed_vars % 2 != 0 || (seed_vars - 4) / 2 < 2) {
        throw std::invalid_argument("gencons2 parameter violation");
      }
      const int k = (seed_vars - 4) / 2;
      Builder b(seed_vars);
      const BitPermutation psi = p.psi ? *p.psi : BitPermutation::identity(k);
      if (psi.size() != k) throw std::invalid_argument("psi size mismatch");
      const Val x1 = b.input(0);
      const Val z1 = b.input(1), z2 = b.input(2), z3 = b.input(3);
      const Val mm = emit_mm(b, psi, 4, 4 + k);
      const Val z13 = b.bxor(z1, z3);
      const Val g0 = b.bxor(b.bxor(b.bxor(z1, z2), b.band(x1, z13)), mm);
      const Val h0 = b.bxor(b.bxor(z13, b.band(x1, z2)), mm);
      return b.finish(emit_rounds_and_mux(b, g0, h0, p.t));
    }
    case Family::step:
    case Family::iter:
      break;
  }
  throw std::invalid_argument("step/iter circuits need explicit seed netlists");
}

Netlist synth_iter(const Netlist& g, const Netlist& h, int t) {
  if (g.num_inputs() != h.num_inputs()) {
    throw std::invalid_argument("seed circuits disagree on input count");
  }
  if (t < 0) throw std::invalid_argument("negative round count");
  Builder b(g.num_inputs());
  const Val gv = b.absorb(g);
  const Val hv = b.absorb(h);
  return b.finish(emit_rounds_and_mux(b, gv, hv, t));
}

}  // namespace bft
