#include "posfact/surface.hpp"

#include <stdexcept>
#include <utility>

namespace posfact {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in homology computation");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in homology computation");
  }
  return out;
}

void check_surface(const SurfacePtr& a, const SurfacePtr& b) {
  if (a && a == b) return;
  if (!a || !b || !(*a == *b)) {
    throw std::invalid_argument("twist words live on different surfaces");
  }
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool IntMatrix::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix size mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const auto x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols(); ++c) {
        out(r, c) = checked_add(out(r, c), checked_mul(x, b(k, c)));
      }
    }
  }
  return out;
}

HomologyClass operator*(const IntMatrix& a, const HomologyClass& x) {
  if (a.cols() != static_cast<int>(x.size())) {
    throw std::invalid_argument("matrix/vector size mismatch");
  }
  HomologyClass out(static_cast<std::size_t>(a.rows()), 0);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      out[r] = checked_add(out[r], checked_mul(a(r, c), x[c]));
    }
  }
  return out;
}

SurfaceModel::SurfaceModel(int genus, int boundaries)
    : SurfaceModel(genus, boundaries, {}, std::nullopt) {}

SurfaceModel::SurfaceModel(int genus, int boundaries, CurveTable extra,
                           std::optional<int> layout)
    : genus_(genus),
      boundaries_(boundaries),
      rank_(boundaries == 2 ? 2 * genus + 1 : 2 * genus),
      extra_(std::move(extra)),
      layout_(layout) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  if (boundaries < 0 || boundaries > 2) {
    throw std::invalid_argument("boundary count must be 0, 1 or 2");
  }
  form_ = IntMatrix(rank_, rank_);
  for (int k = 0; k + 1 < rank_; ++k) {
    form_(k, k + 1) = 1;
    form_(k + 1, k) = -1;
  }
  for (const auto& [tag, cls] : extra_) {
    if (static_cast<int>(cls.size()) != rank_) {
      throw std::invalid_argument("curve table class has wrong rank for " + to_string(tag));
    }
  }
}

bool SurfaceModel::has_curve(const NamedCurve& c) const {
  switch (c.kind) {
    case CurveKind::Chain:
      return c.sub == 0 && c.index >= 1 && c.index <= 2 * genus_ + 1;
    case CurveKind::D:
      return c.sub == 0 && genus_ >= 1 && (c.index == 1 || c.index == 2);
    case CurveKind::Boundary:
      return c.sub == 0 && c.index >= 1 && c.index <= boundaries_;
    default:
      return extra_.contains(c);
  }
}

HomologyClass SurfaceModel::named_class(const NamedCurve& c) const {
  if (!has_curve(c)) {
    throw std::invalid_argument("curve " + to_string(c) + " is not defined on genus " +
                                std::to_string(genus_) + " with " +
                                std::to_string(boundaries_) + " boundary components");
  }
  HomologyClass x(static_cast<std::size_t>(rank_), 0);
  switch (c.kind) {
    case CurveKind::Chain:
      if (c.index <= rank_) {
        x[c.index - 1] = 1;
      } else {
        for (int k = 0; k + 1 < rank_; k += 2) x[k] = -1;
      }
      return x;
    case CurveKind::D:
      if (rank_ >= 1) x[0] = c.index == 1 ? 1 : -1;
      if (rank_ >= 3) x[2] = c.index == 1 ? 1 : -1;
      if (rank_ == 2) {
        // genus one, closed or one boundary: c3 = -c1
        x[0] = 0;
      }
      return x;
    case CurveKind::Boundary:
      return boundary_class();
    default:
      return extra_.at(c);
  }
}

std::int64_t SurfaceModel::pairing(const HomologyClass& x, const HomologyClass& y) const {
  std::int64_t out = 0;
  for (int k = 0; k + 1 < rank_; ++k) {
    out = checked_add(out, checked_mul(x[k], y[k + 1]));
    out = checked_add(out, -checked_mul(x[k + 1], y[k]));
  }
  return out;
}

HomologyClass SurfaceModel::boundary_class() const {
  HomologyClass e(static_cast<std::size_t>(rank_), 0);
  if (boundaries_ == 2) {
    for (int k = 0; k < rank_; k += 2) e[k] = 1;
  }
  return e;
}

bool SurfaceModel::is_radical(const HomologyClass& x) const {
  for (int k = 0; k < rank_; ++k) {
    HomologyClass unit(static_cast<std::size_t>(rank_), 0);
    unit[k] = 1;
    if (pairing(x, unit) != 0) return false;
  }
  return true;
}

bool SurfaceModel::operator==(const SurfaceModel& other) const {
  return genus_ == other.genus_ && boundaries_ == other.boundaries_ &&
         layout_ == other.layout_ && extra_ == other.extra_;
}

SurfacePtr make_surface(int genus, int boundaries) {
  return std::make_shared<const SurfaceModel>(genus, boundaries);
}

TwistWord::TwistWord(SurfacePtr surface) : surface_(std::move(surface)) {
  if (!surface_) throw std::invalid_argument("twist word needs a surface");
}

TwistWord::TwistWord(SurfacePtr surface, std::vector<TwistLetter> letters)
    : TwistWord(std::move(surface)) {
  for (auto& letter : letters) push_back(std::move(letter));
}

TwistWord TwistWord::twist(SurfacePtr surface, NamedCurve c, int sign) {
  TwistWord w(std::move(surface));
  w.push_back({Curve{c, nullptr}, sign});
  return w;
}

bool TwistWord::all_positive() const {
  for (const auto& letter : letters_) {
    if (letter.sign != 1) return false;
  }
  return true;
}

void TwistWord::push_back(TwistLetter letter) {
  if (letter.sign != 1 && letter.sign != -1) {
    throw std::invalid_argument("twist letter sign must be +1 or -1");
  }
  if (!surface_->has_curve(letter.curve.base)) {
    throw std::invalid_argument("curve " + to_string(letter.curve.base) +
                                " is not defined on this surface");
  }
  if (letter.curve.conjugator) {
    check_surface(surface_, letter.curve.conjugator->word.surface());
  }
  letters_.push_back(std::move(letter));
}

void TwistWord::append(const TwistWord& other) {
  check_surface(surface_, other.surface_);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

const IntMatrix& Conjugator::action() const {
  std::call_once(once_, [this] { action_ = homology_action(word); });
  return action_;
}

Curve derived(const TwistWord& w, NamedCurve base) {
  if (w.empty()) return Curve{base, nullptr};
  return Curve{base, std::make_shared<const Conjugator>(w)};
}

Curve derived(std::shared_ptr<const Conjugator> w, NamedCurve base) {
  if (!w || w->word.empty()) return Curve{base, nullptr};
  return Curve{base, std::move(w)};
}

Curve image(const TwistWord& w, const Curve& c) {
  if (c.is_named()) return derived(w, c.base);
  return derived(compose(w, c.conjugator->word), c.base);
}

TwistWord compose(const TwistWord& u, const TwistWord& v) {
  TwistWord out = u;
  out.append(v);
  return out;
}

TwistWord inverse(const TwistWord& w) {
  std::vector<TwistLetter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back({it->curve, -it->sign});
  }
  return TwistWord(w.surface(), std::move(letters));
}

TwistWord power(const TwistWord& w, int exponent) {
  const TwistWord base = exponent < 0 ? inverse(w) : w;
  TwistWord out(w.surface());
  for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.append(base);
  return out;
}

TwistWord conjugate_letters(const TwistWord& w, const TwistWord& x) {
  check_surface(w.surface(), x.surface());
  if (w.empty()) return x;
  auto shared = std::make_shared<const Conjugator>(w);
  TwistWord out(x.surface());
  for (const auto& letter : x.letters()) {
    if (letter.curve.is_named()) {
      out.push_back({derived(shared, letter.curve.base), letter.sign});
    } else {
      out.push_back({image(w, letter.curve), letter.sign});
    }
  }
  return out;
}

TwistWord chain_word(SurfacePtr surface, int first, int last) {
  TwistWord out(std::move(surface));
  for (int k = first; k <= last; ++k) {
    out.push_back({Curve{NamedCurve::chain(k), nullptr}, 1});
  }
  return out;
}

TwistWord transport(const TwistWord& w, SurfacePtr target) {
  TwistWord out(target);
  for (const auto& letter : w.letters()) {
    if (letter.curve.is_named()) {
      out.push_back(letter);
    } else {
      out.push_back(
          {derived(transport(letter.curve.conjugator->word, target), letter.curve.base),
           letter.sign});
    }
  }
  return out;
}

HomologyClass curve_class(const SurfaceModel& surface, const Curve& c) {
  auto x = surface.named_class(c.base);
  if (c.conjugator) {
    const auto& home = c.conjugator->word.surface();
    if (home.get() != &surface && !(*home == surface)) {
      throw std::invalid_argument("derived curve belongs to another surface");
    }
    x = c.conjugator->action() * x;
  }
  return x;
}

namespace {

// m <- m * (I + sign * c (Jc)^T)
void multiply_by_twist(const SurfaceModel& surface, IntMatrix& m,
                       const HomologyClass& c, int sign) {
  const int r = surface.rank();
  HomologyClass jc(static_cast<std::size_t>(r), 0);
  for (int k = 0; k + 1 < r; ++k) {
    jc[k] = checked_add(jc[k], c[k + 1]);
    jc[k + 1] = checked_add(jc[k + 1], -c[k]);
  }
  const HomologyClass mc = m * c;
  for (int i = 0; i < r; ++i) {
    if (mc[i] == 0) continue;
    const auto scaled = sign * mc[i];
    for (int j = 0; j < r; ++j) {
      if (jc[j] != 0) m(i, j) = checked_add(m(i, j), checked_mul(scaled, jc[j]));
    }
  }
}

}  // namespace

IntMatrix twist_action(const SurfaceModel& surface, const Curve& c, int sign) {
  auto m = IntMatrix::identity(surface.rank());
  multiply_by_twist(surface, m, curve_class(surface, c), sign);
  return m;
}

IntMatrix homology_action(const TwistWord& w) {
  const auto& surface = *w.surface();
  auto m = IntMatrix::identity(surface.rank());
  for (const auto& letter : w.letters()) {
    multiply_by_twist(surface, m, curve_class(surface, letter.curve), letter.sign);
  }
  return m;
}

bool verify_homologically(const TwistWord& w1, const TwistWord& w2) {
  check_surface(w1.surface(), w2.surface());
  return homology_action(w1) == homology_action(w2);
}

bool preserves_form(const IntMatrix& m, const IntMatrix& form) {
  return m.transposed() * form * m == form;
}

std::string to_string(const NamedCurve& c) {
  const auto k = std::to_string(c.index);
  const auto i = std::to_string(c.sub);
  switch (c.kind) {
    case CurveKind::Chain:
      return "c" + k;
    case CurveKind::D:
      return "d" + k;
    case CurveKind::Boundary:
      return "delta" + k;
    case CurveKind::SubChain:
      return "c(" + i + "," + k + ")";
    case CurveKind::SubD:
      return "d(" + i + "," + k + ")";
    case CurveKind::SubBoundary:
      return "bd(F" + i + "," + k + ")";
  }
  return "?";
}

std::string to_string(const Curve& c) {
  if (c.is_named()) return to_string(c.base);
  return "img(" + to_string(c.conjugator->word) + "; " + to_string(c.base) + ")";
}

std::string to_string(const TwistLetter& letter) {
  return to_string(letter.curve) + (letter.sign < 0 ? "^-1" : "");
}

std::string to_string(const TwistWord& w) {
  std::string out;
  for (const auto& letter : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(letter);
  }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += std::to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace posfact
