#include "posfact/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace posfact {
namespace {

void check_letter(int strands, BraidLetter letter) {
  if (letter.index < 1 || letter.index >= strands) {
    throw std::invalid_argument("braid generator b" +
                                std::to_string(letter.index) +
                                " out of range for " +
                                std::to_string(strands) + " strands");
  }
  if (letter.sign != 1 && letter.sign != -1) {
    throw std::invalid_argument("braid letter sign must be +1 or -1");
  }
}

void check_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("strand count mismatch: " +
                                std::to_string(a.strands()) + " vs " +
                                std::to_string(b.strands()));
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) {
    throw std::invalid_argument("a braid needs at least one strand");
  }
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : BraidWord(strands) {
  for (auto letter : letters) check_letter(strands, letter);
  letters_ = std::move(letters);
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
  return BraidWord(strands, {BraidLetter{index, sign}});
}

void BraidWord::push_back(BraidLetter letter) {
  check_letter(strands_, letter);
  letters_.push_back(letter);
}

void BraidWord::append(const BraidWord& other) {
  check_same_strands(*this, other);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  BraidWord out = w1;
  out.append(w2);
  return out;
}

BraidWord inverse(const BraidWord& w) {
  std::vector<BraidLetter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back({it->index, -it->sign});
  }
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, int exponent) {
  const BraidWord base = exponent < 0 ? inverse(w) : w;
  BraidWord out(w.strands());
  for (int k = 0; k < std::abs(exponent); ++k) out.append(base);
  return out;
}

BraidWord half_twist_on(int strands, int first, int last) {
  if (first < 1 || last > strands || last - first < 1) {
    throw std::invalid_argument("half twist needs at least two strands");
  }
  BraidWord out(strands);
  // Blocks (b_f ... b_{l-1})(b_f ... b_{l-2}) ... (b_f).
  for (int top = last - 1; top >= first; --top) {
    for (int i = first; i <= top; ++i) out.push_back({i, 1});
  }
  return out;
}

BraidWord half_twist(int n) {
  if (n < 2) throw std::invalid_argument("half_twist requires n >= 2");
  return half_twist_on(n, 1, n);
}

BraidWord full_twist_on(int strands, int first, int last) {
  return power(half_twist_on(strands, first, last), 2);
}

BraidWord full_twist(int n) {
  if (n < 2) throw std::invalid_argument("full_twist requires n >= 2");
  return power(half_twist(n), 2);
}

BraidWord band(int i, int j, const BraidWord& conjugator) {
  const int n = conjugator.strands();
  if (i < 1 || i >= n) {
    throw std::invalid_argument("band generator index out of range");
  }
  if (j <= i || j > n) {
    throw std::invalid_argument("band endpoint out of range");
  }
  BraidWord out = conjugator;
  out.push_back({i, 1});
  out.append(inverse(conjugator));
  return out;
}

BraidWord shifted(const BraidWord& w, int offset, int strands) {
  BraidWord out(strands);
  for (auto letter : w.letters()) {
    out.push_back({letter.index + offset, letter.sign});
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  for (auto letter : w.letters()) {
    if (!stack.empty() && stack.back().index == letter.index &&
        stack.back().sign == -letter.sign) {
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t total = 0;
  for (auto letter : w.letters()) total += letter.sign;
  return total;
}

std::vector<int> end_permutation(const BraidWord& w) {
  std::vector<int> perm(static_cast<std::size_t>(w.strands()));
  std::iota(perm.begin(), perm.end(), 0);
  // The rightmost letter acts first.
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const int a = it->index - 1;
    for (auto& p : perm) {
      if (p == a) {
        p = a + 1;
      } else if (p == a + 1) {
        p = a;
      }
    }
  }
  return perm;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (auto letter : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'b' + std::to_string(letter.index);
    if (letter.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace posfact
