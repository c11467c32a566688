#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "posfact/braid.hpp"
#include "posfact/framed_braid.hpp"
#include "posfact/surface.hpp"

namespace posfact {

/// Four subsurfaces F_1..F_4 of genus 2+l inside the surface of genus
/// 11+4l with two boundary components.
///
/// The surface is the double cover of a disk with 4K branch points,
/// K = 2l+6, grouped into four consecutive clusters of K points. F_1 is the
/// lift of the first cluster; its chain c(1,k) is c_k. The swap rho_{i,i+1}
/// is the lift of Delta * T_i^{-1} * T_{i+1}^{-1} on clusters i and i+1, and
/// the curves of F_{i+1} are the images of those of F_i under
/// rho_{i,i+1}^{-1}, so that A_{i+1} = rho^{-1} A_i rho.
class SurfaceLayout {
 public:
  explicit SurfaceLayout(int l);

  int l() const { return l_; }
  int cluster_width() const { return 2 * l_ + 6; }
  int sub_genus() const { return 2 + l_; }
  int genus() const { return 11 + 4 * l_; }
  int strands() const { return 4 * cluster_width(); }

  /// The ambient surface with the subsurface curves registered.
  const SurfacePtr& surface() const { return surface_; }
  /// The model surface of genus 2+l on which subsurface words A live.
  const SurfacePtr& subsurface() const { return subsurface_; }

  /// Same curve tags on a surface of larger genus, the layout sitting in a
  /// neighborhood of the chain c_1..c_{2G+1}. host_genus == genus() returns
  /// surface().
  SurfacePtr host_surface(int host_genus) const;

  /// rho_{i,i+1} as a braid on strands() strands.
  BraidWord rho_braid(int i) const;
  /// Positive twist word of rho_{i,j} (K letters), cached.
  const TwistWord& rho_twists(int i, int j) const;

 private:
  int l_;
  SurfacePtr surface_;
  SurfacePtr subsurface_;
  std::array<std::array<TwistWord, 5>, 5> rho_;
  mutable std::mutex host_mutex_;
  mutable std::map<int, SurfacePtr> hosts_;
};

using LayoutPtr = std::shared_ptr<const SurfaceLayout>;

/// Shared, lazily built layout for parameter l.
LayoutPtr make_layout(int l);

enum class SwapKind { Rho, Delta, RhoA, Sub, M, Mb };

struct SwapLetter {
  SwapKind kind = SwapKind::Rho;
  int i = 0;
  int j = 0;
  int sign = 1;
  /// Word on the subsurface model, for RhoA and Sub.
  std::shared_ptr<const TwistWord> word;

  static SwapLetter rho(int i, int j, int sign = 1) { return {SwapKind::Rho, i, j, sign, nullptr}; }
  static SwapLetter delta(int i, int j, int sign = 1) { return {SwapKind::Delta, i, j, sign, nullptr}; }
  static SwapLetter m(int i, int sign = 1) { return {SwapKind::M, i, 0, sign, nullptr}; }
  static SwapLetter mb(int sign = 1) { return {SwapKind::Mb, 0, 0, sign, nullptr}; }
  static SwapLetter rho_a(int i, int j, TwistWord a, int sign = 1);
  static SwapLetter sub(TwistWord a, int i, int sign = 1);
};

class SwapWord {
 public:
  SwapWord() = default;
  explicit SwapWord(LayoutPtr layout);
  SwapWord(LayoutPtr layout, std::vector<SwapLetter> letters);

  const LayoutPtr& layout() const { return layout_; }
  const std::vector<SwapLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(SwapLetter letter);
  void append(const SwapWord& other);

 private:
  LayoutPtr layout_;
  std::vector<SwapLetter> letters_;
};

SwapWord compose(const SwapWord& u, const SwapWord& v);
SwapWord inverse(const SwapWord& w);
SwapWord power(const SwapWord& w, int exponent);

/// A acting on F_i: curves c_k, d_k, delta_s of the model become c(i,k),
/// d(i,k), bd(F_i,s).
TwistWord embed(const TwistWord& a, int i, const SurfaceLayout& layout);

TwistWord expand(const SwapWord& w);
TwistWord expand(const SwapLetter& letter, const SurfaceLayout& layout);

/// The induced framed braid on the base disk.
FramedBraid shadow(const SwapWord& w);
FramedBraid shadow(const SwapLetter& letter);

/// Braid on the 4K branch points whose lift is expand(w). Only defined for
/// words without subsurface letters; those throw std::invalid_argument.
BraidWord cable_braid(const SwapWord& w);

/// Exact equality of swap words without subsurface letters, decided in
/// the braid group of the branch points.
bool exact_equal(const SwapWord& a, const SwapWord& b);

/// Rewrites every non-adjacent rho_{ij} as rho_{i,i+1}^{-1} rho_{i+1,j}
/// rho_{i,i+1}, and every rho^A as sub(A) rho sub(A^{-1}).
SwapWord adjacent_spelling(const SwapWord& w);

struct CheckResult {
  std::string name;
  bool passed = false;
};

struct CheckReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Homological checks of A_i rho = rho A_j, A_j rho = rho A_i and of both
/// spellings of rho^A, on the expanded twist words.
CheckReport verify_conjugation_relations(const TwistWord& a, int i, int j,
                                         const LayoutPtr& layout);

/// The braid-type swap relations checked three ways on a layout: the
/// shadows (framed), the branch-point braids (exact) and the expanded
/// twist words (homology).
CheckReport verify_swap_relations(const LayoutPtr& layout);

std::string to_string(const SwapLetter& letter);
std::string to_string(const SwapWord& w);

}  // namespace posfact
