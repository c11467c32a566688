#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace posfact {

using HomologyClass = std::vector<std::int64_t>;

/// Dense integer matrix. Arithmetic is checked: overflow throws
/// std::overflow_error instead of wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

  bool is_identity() const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
HomologyClass operator*(const IntMatrix& a, const HomologyClass& x);

enum class CurveKind {
  Chain,        // c_k
  D,            // d_1, d_2: the two boundary curves of a neighborhood of c1 c2 c3
  Boundary,     // delta_1, delta_2
  SubChain,     // c(i,k): chain curve k of the subsurface F_i
  SubD,         // d(i,k)
  SubBoundary,  // bd(F_i, s): boundary curve s of F_i
};

struct NamedCurve {
  CurveKind kind = CurveKind::Chain;
  int sub = 0;  // subsurface index for the Sub* kinds, otherwise 0
  int index = 1;

  auto operator<=>(const NamedCurve&) const = default;

  static NamedCurve chain(int k) { return {CurveKind::Chain, 0, k}; }
  static NamedCurve d(int k) { return {CurveKind::D, 0, k}; }
  static NamedCurve boundary(int k) { return {CurveKind::Boundary, 0, k}; }
  static NamedCurve sub_chain(int i, int k) { return {CurveKind::SubChain, i, k}; }
  static NamedCurve sub_d(int i, int k) { return {CurveKind::SubD, i, k}; }
  static NamedCurve sub_boundary(int i, int s) { return {CurveKind::SubBoundary, i, s}; }
};

using CurveTable = std::map<NamedCurve, HomologyClass>;

/// The surface of genus g with s boundary components, together with its
/// named curves and their homology classes.
///
/// Basis of H_1: for s = 2 the classes of the chain c_1..c_{2g+1}, rank
/// 2g+1, with <c_k, c_{k+1}> = 1. The radical is spanned by
/// e = c_1 + c_3 + ... + c_{2g+1}, the class of either boundary curve. For
/// s in {0,1} the basis is c_1..c_{2g} and c_{2g+1} = -(c_1 + c_3 + ... +
/// c_{2g-1}).
class SurfaceModel {
 public:
  SurfaceModel(int genus, int boundaries);

  /// Same surface with extra named curves (subsurface tags) registered.
  SurfaceModel(int genus, int boundaries, CurveTable extra, std::optional<int> layout);

  int genus() const { return genus_; }
  int boundaries() const { return boundaries_; }
  int rank() const { return rank_; }
  const IntMatrix& form() const { return form_; }
  /// Layout parameter when subsurface curves are registered.
  std::optional<int> layout() const { return layout_; }

  bool has_curve(const NamedCurve& c) const;
  HomologyClass named_class(const NamedCurve& c) const;
  const CurveTable& extra_curves() const { return extra_; }

  std::int64_t pairing(const HomologyClass& x, const HomologyClass& y) const;
  /// The class e above; zero vector when s < 2.
  HomologyClass boundary_class() const;
  bool is_radical(const HomologyClass& x) const;

  bool operator==(const SurfaceModel& other) const;

 private:
  int genus_;
  int boundaries_;
  int rank_;
  IntMatrix form_;
  CurveTable extra_;
  std::optional<int> layout_;
};

using SurfacePtr = std::shared_ptr<const SurfaceModel>;

SurfacePtr make_surface(int genus, int boundaries);

class TwistWord;
struct Conjugator;

/// A named curve, or its image w(base) under a twist word w.
struct Curve {
  NamedCurve base;
  std::shared_ptr<const Conjugator> conjugator;  // null for a named curve

  bool is_named() const { return conjugator == nullptr; }
};

struct TwistLetter {
  Curve curve;
  int sign = 1;
};

/// A word in Dehn twists on one surface, composed right to left.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(SurfacePtr surface);
  TwistWord(SurfacePtr surface, std::vector<TwistLetter> letters);

  static TwistWord twist(SurfacePtr surface, NamedCurve c, int sign = 1);

  const SurfacePtr& surface() const { return surface_; }
  const std::vector<TwistLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool all_positive() const;

  void push_back(TwistLetter letter);
  void append(const TwistWord& other);

 private:
  SurfacePtr surface_;
  std::vector<TwistLetter> letters_;
};

/// Shared conjugating word of derived curves. Its homology action is
/// computed once, on first use, and is safe to request from several
/// threads.
struct Conjugator {
  explicit Conjugator(TwistWord w) : word(std::move(w)) {}

  TwistWord word;
  const IntMatrix& action() const;

 private:
  mutable std::once_flag once_;
  mutable IntMatrix action_;
};

/// The curve w(base). An empty w gives the named curve itself.
Curve derived(const TwistWord& w, NamedCurve base);
Curve derived(std::shared_ptr<const Conjugator> w, NamedCurve base);
/// w(c) for an arbitrary curve: conjugators are concatenated.
Curve image(const TwistWord& w, const Curve& c);

TwistWord compose(const TwistWord& u, const TwistWord& v);
TwistWord inverse(const TwistWord& w);
TwistWord power(const TwistWord& w, int exponent);
/// w * x * w^{-1} letter by letter: every letter's curve is replaced by its
/// image under w.
TwistWord conjugate_letters(const TwistWord& w, const TwistWord& x);

/// t_{c_first} t_{c_first+1} ... t_{c_last}
TwistWord chain_word(SurfacePtr surface, int first, int last);

/// Rebuild w on another surface that carries the same named curves.
TwistWord transport(const TwistWord& w, SurfacePtr target);

HomologyClass curve_class(const SurfaceModel& surface, const Curve& c);

/// x -> x + sign * <x, [c]> [c]
IntMatrix twist_action(const SurfaceModel& surface, const Curve& c, int sign);

/// Product of letter actions, rightmost letter applied first.
IntMatrix homology_action(const TwistWord& w);

/// Necessary condition for w1 = w2 in the mapping class group: a false
/// result refutes the relation, a true result does not prove it.
bool verify_homologically(const TwistWord& w1, const TwistWord& w2);

bool preserves_form(const IntMatrix& m, const IntMatrix& form);

std::string to_string(const NamedCurve& c);
std::string to_string(const Curve& c);
std::string to_string(const TwistLetter& letter);
std::string to_string(const TwistWord& w);
std::string to_string(const IntMatrix& m);

}  // namespace posfact
