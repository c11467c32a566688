#include "posfact/dynnikov.hpp"

#include <stdexcept>
#include <utility>

namespace posfact {
namespace {

BigInt pos(const BigInt& x) { return x > 0 ? x : BigInt(0); }
BigInt neg(const BigInt& x) { return x < 0 ? x : BigInt(0); }

}  // namespace

DynnikovState standard_dynnikov_state(int strands) {
  DynnikovState s;
  s.a.assign(static_cast<std::size_t>(strands), BigInt(0));
  s.b.assign(static_cast<std::size_t>(strands), BigInt(1));
  return s;
}

void apply_generator(DynnikovState& state, int index, int sign) {
  const auto i = static_cast<std::size_t>(index - 1);
  if (index < 1 || i + 1 >= state.a.size()) {
    throw std::invalid_argument("Dynnikov generator out of range");
  }
  const BigInt a1 = state.a[i];
  const BigInt b1 = state.b[i];
  const BigInt a2 = state.a[i + 1];
  const BigInt b2 = state.b[i + 1];
  if (sign > 0) {
    const BigInt t = a1 - neg(b1) - a2 + pos(b2);
    state.a[i] = a1 + pos(b1) + pos(pos(b2) - t);
    state.b[i] = b2 - pos(t);
    state.a[i + 1] = a2 + neg(b2) + neg(neg(b1) + t);
    state.b[i + 1] = b1 + pos(t);
  } else {
    const BigInt t = a1 + neg(b1) - a2 - pos(b2);
    state.a[i] = a1 - pos(b1) - pos(pos(b2) + t);
    state.b[i] = b2 + neg(t);
    state.a[i + 1] = a2 - neg(b2) - neg(neg(b1) - t);
    state.b[i + 1] = b1 - neg(t);
  }
}

DynnikovState act(const DynnikovState& state, const BraidWord& w) {
  DynnikovState out = state;
  for (auto letter : w.letters()) {
    apply_generator(out, letter.index, letter.sign);
  }
  return out;
}

bool dynnikov_equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) {
    throw std::invalid_argument("dynnikov_equal: strand count mismatch");
  }
  if (w1.strands() < 3) {
    throw std::invalid_argument("dynnikov_equal requires n >= 3");
  }
  const auto start = standard_dynnikov_state(w1.strands());
  return act(start, compose(w1, inverse(w2))) == start;
}

}  // namespace posfact
