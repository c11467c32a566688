#include "posfact/garside.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace posfact {

PermutationFactor::PermutationFactor(std::vector<int> image)
    : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[v] = true;
  }
}

PermutationFactor PermutationFactor::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return PermutationFactor(std::move(image));
}

PermutationFactor PermutationFactor::delta(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) image[k] = n - 1 - k;
  return PermutationFactor(std::move(image));
}

PermutationFactor PermutationFactor::transposition(int n, int index) {
  auto p = identity(n);
  p.multiply_right_generator(index);
  return p;
}

bool PermutationFactor::is_identity() const {
  for (int k = 0; k < strands(); ++k) {
    if (image_[k] != k) return false;
  }
  return true;
}

bool PermutationFactor::is_delta() const {
  const int n = strands();
  for (int k = 0; k < n; ++k) {
    if (image_[k] != n - 1 - k) return false;
  }
  return true;
}

int PermutationFactor::length() const {
  int inversions = 0;
  for (int a = 0; a < strands(); ++a) {
    for (int b = a + 1; b < strands(); ++b) {
      if (image_[a] > image_[b]) ++inversions;
    }
  }
  return inversions;
}

bool PermutationFactor::has_right_descent(int index) const {
  return image_[index - 1] > image_[index];
}

bool PermutationFactor::has_left_descent(int index) const {
  // Compare the positions holding the values index-1 and index.
  int pos_lo = -1;
  int pos_hi = -1;
  for (int k = 0; k < strands(); ++k) {
    if (image_[k] == index - 1) pos_lo = k;
    if (image_[k] == index) pos_hi = k;
  }
  return pos_lo > pos_hi;
}

void PermutationFactor::multiply_right_generator(int index) {
  std::swap(image_[index - 1], image_[index]);
}

void PermutationFactor::multiply_left_generator(int index) {
  for (auto& v : image_) {
    if (v == index - 1) {
      v = index;
    } else if (v == index) {
      v = index - 1;
    }
  }
}

PermutationFactor PermutationFactor::flipped() const {
  const int n = strands();
  std::vector<int> image(image_.size());
  for (int k = 0; k < n; ++k) image[k] = n - 1 - image_[n - 1 - k];
  return PermutationFactor(std::move(image));
}

BraidWord PermutationFactor::to_word() const {
  PermutationFactor rest = *this;
  std::vector<BraidLetter> reversed;
  while (!rest.is_identity()) {
    for (int i = 1; i < strands(); ++i) {
      if (rest.has_right_descent(i)) {
        rest.multiply_right_generator(i);
        reversed.push_back({i, 1});
        break;
      }
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return BraidWord(std::max(strands(), 1), std::move(reversed));
}

namespace {

// Moves generators from the front of b to the back of a until the pair is
// left-weighted. Returns whether anything moved.
bool left_weight(PermutationFactor& a, PermutationFactor& b) {
  bool changed = false;
  const int n = a.strands();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (b.has_left_descent(i) && !a.has_right_descent(i)) {
        a.multiply_right_generator(i);
        b.multiply_left_generator(i);
        moved = changed = true;
        break;
      }
    }
  }
  return changed;
}

void tidy(GarsideNormalForm& nf) {
  auto& f = nf.factors;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 1; j < f.size(); ++j) {
      changed |= left_weight(f[j - 1], f[j]);
    }
    const auto old_size = f.size();
    std::erase_if(f, [](const PermutationFactor& p) { return p.is_identity(); });
    while (!f.empty() && f.front().is_delta()) {
      f.erase(f.begin());
      ++nf.infimum;
    }
    changed |= f.size() != old_size;
  }
}

}  // namespace

GarsideNormalForm normal_form(const BraidWord& w) {
  GarsideNormalForm nf;
  nf.strands = w.strands();
  const int n = w.strands();
  if (n < 2) return nf;

  auto& f = nf.factors;
  for (auto letter : w.letters()) {
    if (letter.sign > 0) {
      f.push_back(PermutationFactor::transposition(n, letter.index));
    } else {
      // b_i^{-1} = Delta^{-1} (Delta b_i^{-1}); slide Delta^{-1} to the front
      // through the existing factors, flipping each.
      for (auto& x : f) x = x.flipped();
      --nf.infimum;
      auto d = PermutationFactor::delta(n);
      d.multiply_right_generator(letter.index);
      f.push_back(std::move(d));
    }
    for (std::size_t j = f.size() - 1; j > 0; --j) {
      if (!left_weight(f[j - 1], f[j])) break;
    }
    while (!f.empty() && f.back().is_identity()) f.pop_back();
    while (!f.empty() && f.front().is_delta()) {
      f.erase(f.begin());
      ++nf.infimum;
    }
  }
  tidy(nf);
  return nf;
}

BraidWord to_word(const GarsideNormalForm& nf) {
  const int n = nf.strands;
  BraidWord out(n);
  if (n < 2) return out;
  out.append(power(half_twist(n), nf.infimum));
  for (const auto& factor : nf.factors) out.append(factor.to_word());
  return out;
}

bool equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) {
    throw std::invalid_argument("equal: strand count mismatch");
  }
  return normal_form(w1) == normal_form(w2);
}

std::string to_string(const GarsideNormalForm& nf) {
  std::string out = "Delta^" + std::to_string(nf.infimum);
  for (const auto& factor : nf.factors) {
    out += " [";
    for (std::size_t k = 0; k < factor.image().size(); ++k) {
      if (k) out += ',';
      out += std::to_string(factor.image()[k] + 1);
    }
    out += ']';
  }
  return out;
}

}  // namespace posfact
