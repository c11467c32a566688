#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace posfact {

/// Artin generator b_index raised to sign (+1 or -1).
struct BraidLetter {
  int index = 1;
  int sign = 1;

  bool operator==(const BraidLetter&) const = default;
};

/// A word in the Artin generators of B_n.
///
/// Words compose right to left: in the product `u * v` the braid `v` acts
/// first. Words are never reduced implicitly, so letter counts survive
/// exactly as constructed; call normal_form() (garside.hpp) to decide
/// equality in the group.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<BraidLetter> letters);

  static BraidWord generator(int strands, int index, int sign = 1);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(BraidLetter letter);
  void append(const BraidWord& other);

  /// Literal (letter-by-letter) equality. Group equality is posfact::equal.
  bool operator==(const BraidWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

/// w1 * w2, with w2 applied first.
BraidWord compose(const BraidWord& w1, const BraidWord& w2);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, int exponent);

/// (b1...b_{n-1})(b1...b_{n-2})...(b1 b2)(b1).
BraidWord half_twist(int n);
BraidWord full_twist(int n);

/// Half twist of the consecutive strands first..last (1-based, inclusive)
/// inside B_strands.
BraidWord half_twist_on(int strands, int first, int last);
BraidWord full_twist_on(int strands, int first, int last);

/// The band conjugator * b_i * conjugator^{-1}. `j` records which marked
/// point the band reaches and is only range-checked.
BraidWord band(int i, int j, const BraidWord& conjugator);

/// Re-index w into B_strands with every generator index shifted by offset.
BraidWord shifted(const BraidWord& w, int offset, int strands);

BraidWord free_reduce(const BraidWord& w);

std::int64_t exponent_sum(const BraidWord& w);

/// perm[p] = final position (0-based) of the strand that starts at p.
std::vector<int> end_permutation(const BraidWord& w);

std::string to_string(const BraidWord& w);

}  // namespace posfact
