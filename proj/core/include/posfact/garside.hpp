#pragma once

#include <string>
#include <vector>

#include "posfact/braid.hpp"

namespace posfact {

/// A simple (permutation) braid, stored as the permutation it induces.
///
/// image[k] is where position k goes (0-based). Products of braids map to
/// composition of permutations in the same order, so the simple braid
/// b_{i1} ... b_{ik} is s_{i1} o ... o s_{ik}.
class PermutationFactor {
 public:
  PermutationFactor() = default;
  explicit PermutationFactor(std::vector<int> image);

  static PermutationFactor identity(int n);
  static PermutationFactor delta(int n);
  static PermutationFactor transposition(int n, int index);

  int strands() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  bool is_delta() const;
  int length() const;  // number of crossings

  /// Generators s_i (1-based) with length(this * s_i) < length(this).
  bool has_right_descent(int index) const;
  /// Generators s_i with length(s_i * this) < length(this).
  bool has_left_descent(int index) const;

  void multiply_right_generator(int index);  // this <- this * s_i
  void multiply_left_generator(int index);   // this <- s_i * this

  /// Conjugation by the half twist: Delta * x * Delta^{-1}.
  PermutationFactor flipped() const;

  /// A positive word spelling this factor.
  BraidWord to_word() const;

  bool operator==(const PermutationFactor&) const = default;

 private:
  std::vector<int> image_;
};

/// Left normal form Delta^infimum * A_1 * ... * A_k.
///
/// Every A_i is a simple braid other than the identity and Delta, and each
/// consecutive pair is left-weighted: every generator that A_{i+1} can
/// start with is one that A_i can end with.
struct GarsideNormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<PermutationFactor> factors;

  bool operator==(const GarsideNormalForm&) const = default;

  int supremum() const { return infimum + static_cast<int>(factors.size()); }
  bool is_identity() const { return infimum == 0 && factors.empty(); }
};

GarsideNormalForm normal_form(const BraidWord& w);

/// The word Delta^infimum A_1 ... A_k spelled in Artin generators.
BraidWord to_word(const GarsideNormalForm& nf);

/// Group equality in B_n, decided by normal forms.
bool equal(const BraidWord& w1, const BraidWord& w2);

std::string to_string(const GarsideNormalForm& nf);

}  // namespace posfact
