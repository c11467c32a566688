#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posfact/braid.hpp"

namespace posfact {

using BigInt = boost::multiprecision::cpp_int;

/// Dynnikov coordinates (a_1, b_1, ..., a_n, b_n) of an integral lamination.
///
/// B_n acts on the right; the orbit of the standard state (0,1,...,0,1) is
/// faithful, which makes this an independent solution of the word problem.
/// Coordinates grow exponentially with word length, hence BigInt.
struct DynnikovState {
  std::vector<BigInt> a;
  std::vector<BigInt> b;

  bool operator==(const DynnikovState&) const = default;
};

DynnikovState standard_dynnikov_state(int strands);

/// state . b_index^sign
void apply_generator(DynnikovState& state, int index, int sign);

/// state . w, letters applied left to right (right action).
DynnikovState act(const DynnikovState& state, const BraidWord& w);

/// True iff w1 w2^{-1} fixes the standard state.
bool dynnikov_equal(const BraidWord& w1, const BraidWord& w2);

}  // namespace posfact
