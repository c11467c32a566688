#pragma once

#include <vector>

#include "posfact/braid.hpp"
#include "posfact/framed_braid.hpp"
#include "posfact/surface.hpp"

namespace posfact {

/// Letterwise image b_i -> t_{c_i} of the double branched cover
/// B_{2g+2} -> Mod(genus g, two boundary components).
///
/// If `surface` is null the standard surface of genus (n-2)/2 is used;
/// otherwise it must have that genus and two boundary components.
TwistWord lift(const BraidWord& w, SurfacePtr surface = nullptr);

/// The curve w(c_index) on the cover, i.e. the lift of the band
/// w b_index w^{-1}.
Curve lift_band(const BraidWord& conjugator, int index, const SurfacePtr& surface);

/// Replace every letter of `x` by a twist of width `width` strands: each
/// crossing becomes a positive permutation braid exchanging two blocks, and
/// framing f on starting strand p becomes f full twists of block p, applied
/// before the crossings.
BraidWord cable(const FramedBraid& x, int width);

/// Checks that the full twist on 2g+2 strands lifts to a word acting like
/// the boundary multitwist on homology, and that it equals the cable of the
/// framed boundary multitwist on two blocks of g+1 strands exactly.
bool verify_delta_square_lift(int g);
/// The same checks with `candidate` in place of the full twist.
bool verify_delta_square_lift(int g, const BraidWord& candidate);

/// Delta * T_1^{-1} * T_2^{-1} on 4gp+4 strands, where T_1 and T_2 are full
/// twists of the first and last 2gp+2 strands.
BraidWord swap_braid(int gp);

/// Positive bands conj_k * b_{index_k} * conj_k^{-1}, k = 1..2gp+2, whose
/// product is swap_braid(gp).
struct BandFactorization {
  int gp = 0;
  int strands = 0;
  std::vector<BraidWord> conjugators;
  std::vector<int> indices;

  std::size_t size() const { return conjugators.size(); }
  BraidWord band_word(std::size_t k) const;
  BraidWord product() const;
};

/// The certified band factorization. The certificate (exact equality with
/// swap_braid) is checked once per gp and cached; a failed check throws
/// std::logic_error.
const BandFactorization& rho_band_factorization(int gp);

/// Twist word of the lifted bands, with every band shifted right by
/// `offset` strands into a cover of `surface`.
TwistWord lift_bands(const BandFactorization& bands, const SurfacePtr& surface,
                     int offset = 0);

}  // namespace posfact
