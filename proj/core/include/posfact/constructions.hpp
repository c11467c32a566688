#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posfact/surface.hpp"
#include "posfact/swap.hpp"

namespace posfact {

/// A word of positive Dehn twists together with what it factorizes.
/// Construction throws std::invalid_argument if any letter is negative.
class PositiveFactorization {
 public:
  PositiveFactorization(std::string target, TwistWord word,
                        std::vector<std::string> notes = {});

  const std::string& target() const { return target_; }
  const TwistWord& word() const { return word_; }
  /// One provenance note per letter (may be empty).
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t length() const { return word_.size(); }

  /// Swap-level spelling of the factorization, when it has one.
  const std::optional<SwapWord>& skeleton() const { return skeleton_; }
  void set_skeleton(SwapWord skeleton) { skeleton_ = std::move(skeleton); }

 private:
  std::string target_;
  TwistWord word_;
  std::vector<std::string> notes_;
  std::optional<SwapWord> skeleton_;
};

/// t_{c2} t_{c3} (t_{c1} t_{c2} t_{c3})^2 t_{c1} t_{c2}. Defaults to the
/// genus 2 surface with two boundary components.
TwistWord word_T(SurfacePtr surface = nullptr);

struct PsiSearch {
  TwistWord word;
  HomologyClass image_c1;
  HomologyClass image_d1;
  std::size_t states_visited = 0;
};

/// Shortest word in twists about c1..c5, d1, d2 (either sign) sending the
/// classes of (c1, d1) to (+-d2, +-c3), found by breadth-first search on
/// the genus 2 surface. `seed` permutes the generator order (0 keeps the
/// natural order), which can change which shortest word is returned.
/// Throws std::runtime_error if nothing is found within max_depth.
const PsiSearch& make_psi(std::uint64_t seed = 0, int max_depth = 10);

/// (T^m, C(m)) on the genus 2 surface, C(m) = psi A psi^-1 A^-1 with
/// A = t_{c1}^-m t_{d1}^m. T^m = A psi A^-1 psi^-1, so T^m C(m) = 1.
std::pair<TwistWord, TwistWord> commutator_relation(int m, std::uint64_t seed = 0);

/// rho24 rho13 rho34 rho23 rho12 on the layout with parameter l.
SwapWord phi(int l = 0);

/// Subsurface letters collected in front of a swap word.
struct PushResult {
  std::array<TwistWord, 5> prefixes;  // index 1..4, freely reduced
  SwapWord swaps;
};

/// Moves every subsurface letter to the front: rho^{+-1}_{ij} X_j becomes
/// X_i rho^{+-1}_{ij} and vice versa, letters on other subsurfaces and
/// boundary twists commute past, rho^A is first opened up as
/// sub(A) rho sub(A^-1). Rules are applied left to right.
PushResult push_subsurface_letters(const SwapWord& w);

/// 10m + 5(2l+6) positive twists whose product is Phi.
PositiveFactorization phi_factorization(int m, int l = 0, std::uint64_t seed = 0);

/// Inserting positive letters into a word equals appending conjugates on
/// the left. Insertion positions count letters of the original word from
/// the left; several insertions at one position keep their order.
struct TwistAppend {
  TwistWord w_tilde;
  TwistWord full;      // w_tilde * w
  TwistWord in_place;  // w with the letters inserted
};
TwistAppend insert_equals_append(const TwistWord& w,
                                 const std::vector<std::pair<std::size_t, TwistLetter>>& insertions);

struct SwapAppend {
  SwapWord in_place;
  SwapWord w_tilde_skeleton;  // prefix * x * prefix^-1 per insertion
  TwistWord w_tilde;          // the same, expanded into positive twists
};
SwapAppend insert_equals_append(const SwapWord& w,
                                const std::vector<std::pair<std::size_t, SwapLetter>>& insertions);

/// The insertions turning Phi into (rho34 rho23 rho12)^4.
std::vector<std::pair<std::size_t, SwapLetter>> phi_insertions();

/// Positive factorization of the boundary multitwist of the layout surface.
/// Carries its swap skeleton.
PositiveFactorization boundary_multitwist_factorization(int m, int l = 0,
                                                        std::uint64_t seed = 0);

/// Lifts a factorization of the boundary multitwist to genus `target_genus`
/// by embedding the genus-G chain word in the larger one.
PositiveFactorization extend_to_genus(int target_genus, const PositiveFactorization& base);

}  // namespace posfact
