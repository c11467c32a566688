#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posfact/braid.hpp"

namespace posfact {

/// An element of the framed braid group: a braid plus one integer framing
/// per strand.
///
/// framings[p] belongs to the strand that STARTS at position p (0-based).
/// Composition is semidirect: framings are carried along by the underlying
/// braid's permutation, see fcompose().
class FramedBraid {
 public:
  FramedBraid() = default;
  explicit FramedBraid(int strands);
  FramedBraid(BraidWord underlying, std::vector<std::int64_t> framings);

  static FramedBraid pure_framing(int strands, std::vector<std::int64_t> framings);

  int strands() const { return underlying_.strands(); }
  const BraidWord& underlying() const { return underlying_; }
  const std::vector<std::int64_t>& framings() const { return framings_; }
  std::int64_t total_framing() const;

 private:
  BraidWord underlying_;
  std::vector<std::int64_t> framings_;
};

/// g * h with h applied first. The framing of starting strand p is
/// framings_h[p] + framings_g[perm_h(p)].
FramedBraid fcompose(const FramedBraid& g, const FramedBraid& h);
FramedBraid finverse(const FramedBraid& x);
FramedBraid fpower(const FramedBraid& x, int exponent);

/// True iff the underlying braids are equal in B_n and the framings agree.
bool framed_equal(const FramedBraid& x, const FramedBraid& y);

/// Framing contributed by one adjacent exchange of positions (i, i+1): the
/// strand leaving position i receives `lower`, the one leaving i+1 receives
/// `upper`.
struct SwapFraming {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

inline constexpr SwapFraming kDeltaFraming{1, 0};
inline constexpr SwapFraming kRhoFraming{0, -1};

/// Framed half twist exchanging adjacent positions (i, j), j = i + 1.
FramedBraid delta_framed(int i, int j, int strands = 4);

/// Swap map on the base disk. Adjacent pairs are primitive; for j > i + 1
/// the value is rho_{i,i+1}^{-1} rho_{i+1,j} rho_{i,i+1}.
FramedBraid rho_framed(int i, int j, int strands = 4);

/// Same construction as rho_framed with an arbitrary adjacent framing rule.
FramedBraid swap_framed(int i, int j, SwapFraming rule, int strands = 4);

/// Full twist with framing +1 on every strand.
FramedBraid boundary_multitwist_framed(int n);

/// Pure framing +exponent on one strand (1-based).
FramedBraid boundary_framing(int strands, int strand, int exponent = 1);

struct RelationCheck {
  std::string name;
  bool braid_part = false;
  bool framing_part = false;
  bool passed() const { return braid_part && framing_part; }
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const;
  const RelationCheck* find(const std::string& name) const;
};

/// Checks the braid-type swap relations and the two full-twist identities
/// on four strands using the given framing rules for delta and rho.
RelationReport verify_swap_braid_relations(SwapFraming delta_rule = kDeltaFraming,
                                           SwapFraming rho_rule = kRhoFraming);

std::string to_string(const FramedBraid& x);

}  // namespace posfact
