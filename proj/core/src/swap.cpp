#include "posfact/swap.hpp"

#include <stdexcept>
#include <utility>

#include "posfact/garside.hpp"
#include "posfact/lift.hpp"

namespace posfact {
namespace {

void check_pair(int i, int j) {
  if (i < 1 || j <= i || j > 4) {
    throw std::invalid_argument("swap indices must satisfy 1 <= i < j <= 4, got (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

void check_index(int i) {
  if (i < 1 || i > 4) {
    throw std::invalid_argument("subsurface index must be in 1..4, got " + std::to_string(i));
  }
}

NamedCurve relabel(const NamedCurve& c, int i) {
  switch (c.kind) {
    case CurveKind::Chain:
      return NamedCurve::sub_chain(i, c.index);
    case CurveKind::D:
      return NamedCurve::sub_d(i, c.index);
    case CurveKind::Boundary:
      return NamedCurve::sub_boundary(i, c.index);
    default:
      throw std::invalid_argument("curve " + to_string(c) +
                                  " is not a curve of the subsurface model");
  }
}

CurveTable subsurface_table(const SurfaceLayout& layout) {
  const int k = layout.cluster_width();
  const auto base = make_surface(layout.genus(), 2);
  const int rank = base->rank();

  std::vector<std::pair<NamedCurve, HomologyClass>> current;
  auto unit = [&](std::initializer_list<std::pair<int, int>> terms) {
    HomologyClass x(static_cast<std::size_t>(rank), 0);
    for (auto [index, coeff] : terms) x[index - 1] += coeff;
    return x;
  };
  for (int c = 1; c <= k - 1; ++c) current.emplace_back(NamedCurve::sub_chain(1, c), unit({{c, 1}}));
  current.emplace_back(NamedCurve::sub_d(1, 1), unit({{1, 1}, {3, 1}}));
  current.emplace_back(NamedCurve::sub_d(1, 2), unit({{1, -1}, {3, -1}}));
  HomologyClass e(static_cast<std::size_t>(rank), 0);
  for (int c = 1; c <= k - 1; c += 2) e[c - 1] = 1;
  current.emplace_back(NamedCurve::sub_boundary(1, 1), e);
  current.emplace_back(NamedCurve::sub_boundary(1, 2), e);

  CurveTable table(current.begin(), current.end());
  for (int i = 1; i <= 3; ++i) {
    const auto back = homology_action(lift(inverse(layout.rho_braid(i)), base));
    for (auto& [tag, cls] : current) {
      tag.sub = i + 1;
      cls = back * cls;
      table.emplace(tag, cls);
    }
  }
  return table;
}

}  // namespace

SurfaceLayout::SurfaceLayout(int l) : l_(l) {
  if (l < 0) throw std::invalid_argument("layout parameter l must be >= 0");
  subsurface_ = make_surface(sub_genus(), 2);
  surface_ = std::make_shared<const SurfaceModel>(genus(), 2, subsurface_table(*this), l);

  const auto& bands = rho_band_factorization(sub_genus());
  const int k = cluster_width();
  for (int i = 1; i <= 3; ++i) rho_[i][i + 1] = lift_bands(bands, surface_, (i - 1) * k);
  for (int span = 2; span <= 3; ++span) {
    for (int i = 1; i + span <= 4; ++i) {
      const int j = i + span;
      rho_[i][j] = conjugate_letters(inverse(rho_[i][i + 1]), rho_[i + 1][j]);
    }
  }
}

SurfacePtr SurfaceLayout::host_surface(int host_genus) const {
  if (host_genus == genus()) return surface_;
  if (host_genus < genus()) {
    throw std::invalid_argument("host surface genus " + std::to_string(host_genus) +
                                " is smaller than the layout genus " + std::to_string(genus()));
  }
  std::lock_guard lock(host_mutex_);
  if (auto it = hosts_.find(host_genus); it != hosts_.end()) return it->second;
  CurveTable table;
  for (auto [tag, cls] : surface_->extra_curves()) {
    cls.resize(static_cast<std::size_t>(2 * host_genus + 1), 0);
    table.emplace(tag, std::move(cls));
  }
  auto host = std::make_shared<const SurfaceModel>(host_genus, 2, std::move(table), l_);
  hosts_.emplace(host_genus, host);
  return host;
}

BraidWord SurfaceLayout::rho_braid(int i) const {
  if (i < 1 || i > 3) throw std::invalid_argument("adjacent swap index must be 1..3");
  return shifted(swap_braid(sub_genus()), (i - 1) * cluster_width(), strands());
}

const TwistWord& SurfaceLayout::rho_twists(int i, int j) const {
  check_pair(i, j);
  return rho_[i][j];
}

LayoutPtr make_layout(int l) {
  static std::mutex mutex;
  static std::map<int, LayoutPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(l); it != cache.end()) return it->second;
  auto layout = std::make_shared<const SurfaceLayout>(l);
  cache.emplace(l, layout);
  return layout;
}

SwapLetter SwapLetter::rho_a(int i, int j, TwistWord a, int sign) {
  return {SwapKind::RhoA, i, j, sign, std::make_shared<const TwistWord>(std::move(a))};
}

SwapLetter SwapLetter::sub(TwistWord a, int i, int sign) {
  return {SwapKind::Sub, i, 0, sign, std::make_shared<const TwistWord>(std::move(a))};
}

SwapWord::SwapWord(LayoutPtr layout) : layout_(std::move(layout)) {
  if (!layout_) throw std::invalid_argument("swap word needs a layout");
}

SwapWord::SwapWord(LayoutPtr layout, std::vector<SwapLetter> letters)
    : SwapWord(std::move(layout)) {
  for (auto& letter : letters) push_back(std::move(letter));
}

void SwapWord::push_back(SwapLetter letter) {
  if (letter.sign != 1 && letter.sign != -1) {
    throw std::invalid_argument("swap letter sign must be +1 or -1");
  }
  switch (letter.kind) {
    case SwapKind::Rho:
      check_pair(letter.i, letter.j);
      break;
    case SwapKind::Delta:
      check_pair(letter.i, letter.j);
      if (letter.j != letter.i + 1) {
        throw std::invalid_argument("delta swaps are only defined for adjacent pairs");
      }
      break;
    case SwapKind::RhoA:
      check_pair(letter.i, letter.j);
      [[fallthrough]];
    case SwapKind::Sub:
      check_index(letter.i);
      if (!letter.word || !(*letter.word->surface() == *layout_->subsurface())) {
        throw std::invalid_argument("subsurface word must live on the genus " +
                                    std::to_string(layout_->sub_genus()) + " model");
      }
      break;
    case SwapKind::M:
      check_index(letter.i);
      break;
    case SwapKind::Mb:
      break;
  }
  letters_.push_back(std::move(letter));
}

void SwapWord::append(const SwapWord& other) {
  if (layout_ != other.layout_ && layout_->l() != other.layout_->l()) {
    throw std::invalid_argument("swap words on different layouts");
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

SwapWord compose(const SwapWord& u, const SwapWord& v) {
  SwapWord out = u;
  out.append(v);
  return out;
}

SwapWord inverse(const SwapWord& w) {
  SwapWord out(w.layout());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    auto letter = *it;
    letter.sign = -letter.sign;
    out.push_back(std::move(letter));
  }
  return out;
}

SwapWord power(const SwapWord& w, int exponent) {
  const SwapWord base = exponent < 0 ? inverse(w) : w;
  SwapWord out(w.layout());
  for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.append(base);
  return out;
}

TwistWord embed(const TwistWord& a, int i, const SurfaceLayout& layout) {
  check_index(i);
  if (!(*a.surface() == *layout.subsurface())) {
    throw std::invalid_argument("embed: word is not on the subsurface model");
  }
  TwistWord out(layout.surface());
  for (const auto& letter : a.letters()) {
    const auto base = relabel(letter.curve.base, i);
    if (letter.curve.is_named()) {
      out.push_back({Curve{base, nullptr}, letter.sign});
    } else {
      out.push_back({derived(embed(letter.curve.conjugator->word, i, layout), base), letter.sign});
    }
  }
  return out;
}

TwistWord expand(const SwapLetter& letter, const SurfaceLayout& layout) {
  const auto& surface = layout.surface();
  TwistWord out(surface);
  switch (letter.kind) {
    case SwapKind::Rho:
      out = layout.rho_twists(letter.i, letter.j);
      break;
    case SwapKind::Delta:
      out = layout.rho_twists(letter.i, letter.j);
      for (int s : {letter.i, letter.j}) {
        out.append(TwistWord::twist(surface, NamedCurve::sub_boundary(s, 1)));
        out.append(TwistWord::twist(surface, NamedCurve::sub_boundary(s, 2)));
      }
      break;
    case SwapKind::RhoA:
      out = conjugate_letters(embed(*letter.word, letter.i, layout),
                              layout.rho_twists(letter.i, letter.j));
      break;
    case SwapKind::Sub:
      out = embed(*letter.word, letter.i, layout);
      break;
    case SwapKind::M:
      out.append(TwistWord::twist(surface, NamedCurve::sub_boundary(letter.i, 1)));
      out.append(TwistWord::twist(surface, NamedCurve::sub_boundary(letter.i, 2)));
      break;
    case SwapKind::Mb:
      out.append(TwistWord::twist(surface, NamedCurve::boundary(1)));
      out.append(TwistWord::twist(surface, NamedCurve::boundary(2)));
      break;
  }
  return letter.sign > 0 ? out : inverse(out);
}

TwistWord expand(const SwapWord& w) {
  TwistWord out(w.layout()->surface());
  for (const auto& letter : w.letters()) out.append(expand(letter, *w.layout()));
  return out;
}

FramedBraid shadow(const SwapLetter& letter) {
  FramedBraid out(4);
  switch (letter.kind) {
    case SwapKind::Rho:
    case SwapKind::RhoA:
      out = rho_framed(letter.i, letter.j);
      break;
    case SwapKind::Delta:
      out = delta_framed(letter.i, letter.j);
      break;
    case SwapKind::Sub:
      break;
    case SwapKind::M:
      out = boundary_framing(4, letter.i);
      break;
    case SwapKind::Mb:
      out = boundary_multitwist_framed(4);
      break;
  }
  return letter.sign > 0 ? out : finverse(out);
}

FramedBraid shadow(const SwapWord& w) {
  FramedBraid out(4);
  for (const auto& letter : w.letters()) out = fcompose(out, shadow(letter));
  return out;
}

namespace {

BraidWord cable_letter(const SwapLetter& letter, const SurfaceLayout& layout) {
  const int n = layout.strands();
  const int k = layout.cluster_width();
  BraidWord out(n);
  switch (letter.kind) {
    case SwapKind::Rho:
      if (letter.j == letter.i + 1) {
        out = layout.rho_braid(letter.i);
      } else {
        const auto step = layout.rho_braid(letter.i);
        out = compose(compose(inverse(step),
                              cable_letter(SwapLetter::rho(letter.i + 1, letter.j), layout)),
                      step);
      }
      break;
    case SwapKind::Delta:
      out = half_twist_on(n, (letter.i - 1) * k + 1, letter.j * k);
      break;
    case SwapKind::M:
      out = full_twist_on(n, (letter.i - 1) * k + 1, letter.i * k);
      break;
    case SwapKind::Mb:
      out = full_twist(n);
      break;
    case SwapKind::RhoA:
    case SwapKind::Sub:
      if (!letter.word->empty()) {
        throw std::invalid_argument(
            "subsurface letters have no braid model; use the framed or homology tier");
      }
      if (letter.kind == SwapKind::RhoA) {
        out = cable_letter(SwapLetter::rho(letter.i, letter.j), layout);
      }
      break;
  }
  return letter.sign > 0 ? out : inverse(out);
}

}  // namespace

BraidWord cable_braid(const SwapWord& w) {
  BraidWord out(w.layout()->strands());
  for (const auto& letter : w.letters()) out.append(cable_letter(letter, *w.layout()));
  return out;
}

bool exact_equal(const SwapWord& a, const SwapWord& b) {
  return equal(cable_braid(a), cable_braid(b));
}

SwapWord adjacent_spelling(const SwapWord& w) {
  SwapWord out(w.layout());
  for (const auto& letter : w.letters()) {
    SwapWord piece(w.layout());
    if (letter.kind == SwapKind::Rho && letter.j > letter.i + 1) {
      const auto step = SwapLetter::rho(letter.i, letter.i + 1);
      piece.push_back(SwapLetter::rho(letter.i, letter.i + 1, -1));
      piece.append(adjacent_spelling(SwapWord(w.layout(), {SwapLetter::rho(letter.i + 1, letter.j)})));
      piece.push_back(step);
    } else if (letter.kind == SwapKind::RhoA) {
      piece.push_back(SwapLetter::sub(*letter.word, letter.i));
      piece.append(adjacent_spelling(SwapWord(w.layout(), {SwapLetter::rho(letter.i, letter.j)})));
      piece.push_back(SwapLetter::sub(*letter.word, letter.i, -1));
    } else {
      piece.push_back(letter);
    }
    out.append(letter.sign > 0 || piece.size() == 1 ? piece : inverse(piece));
  }
  return out;
}

bool CheckReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckReport verify_conjugation_relations(const TwistWord& a, int i, int j,
                                         const LayoutPtr& layout) {
  check_pair(i < j ? i : j, i < j ? j : i);
  const int lo = i < j ? i : j;
  const int hi = i < j ? j : i;
  const auto ai = embed(a, i, *layout);
  const auto aj = embed(a, j, *layout);
  const auto& rho = layout->rho_twists(lo, hi);
  const auto rho_a = expand(SwapLetter::rho_a(lo, hi, a), *layout);
  const auto a_lo = embed(a, lo, *layout);
  const auto a_hi = embed(a, hi, *layout);

  CheckReport report;
  report.checks.push_back({"A_i rho_ij = rho_ij A_j",
                           verify_homologically(compose(ai, rho), compose(rho, aj))});
  report.checks.push_back({"A_j rho_ij = rho_ij A_i",
                           verify_homologically(compose(aj, rho), compose(rho, ai))});
  report.checks.push_back(
      {"A_i rho_ij A_i^-1 = rho_ij^A",
       verify_homologically(compose(compose(a_lo, rho), inverse(a_lo)), rho_a)});
  report.checks.push_back(
      {"rho_ij^A = A_j^-1 rho_ij A_j",
       verify_homologically(rho_a, compose(compose(inverse(a_hi), rho), a_hi))});
  return report;
}

CheckReport verify_swap_relations(const LayoutPtr& layout) {
  const auto word = [&](std::initializer_list<SwapLetter> letters) {
    return SwapWord(layout, letters);
  };
  const auto r = [](int i, int j, int sign = 1) { return SwapLetter::rho(i, j, sign); };
  const auto d = [](int i, int j) { return SwapLetter::delta(i, j); };

  struct Relation {
    std::string name;
    SwapWord lhs;
    SwapWord rhs;
  };
  std::vector<Relation> relations = {
      {"rho12 rho23 rho12 = rho23 rho12 rho23", word({r(1, 2), r(2, 3), r(1, 2)}),
       word({r(2, 3), r(1, 2), r(2, 3)})},
      {"rho23 rho34 rho23 = rho34 rho23 rho34", word({r(2, 3), r(3, 4), r(2, 3)}),
       word({r(3, 4), r(2, 3), r(3, 4)})},
      {"rho13 = rho12^-1 rho23 rho12", word({r(1, 3)}), word({r(1, 2, -1), r(2, 3), r(1, 2)})},
      {"rho13 = rho23 rho12 rho23^-1", word({r(1, 3)}), word({r(2, 3), r(1, 2), r(2, 3, -1)})},
      {"rho24 = rho23^-1 rho34 rho23", word({r(2, 4)}), word({r(2, 3, -1), r(3, 4), r(2, 3)})},
      {"rho24 = rho34 rho23 rho34^-1", word({r(2, 4)}), word({r(3, 4), r(2, 3), r(3, 4, -1)})},
      {"rho12 rho34 = rho34 rho12", word({r(1, 2), r(3, 4)}), word({r(3, 4), r(1, 2)})},
      {"(delta34 delta23 delta12)^4 = Mb M4^2 M3^2 M2^2 M1^2",
       power(word({d(3, 4), d(2, 3), d(1, 2)}), 4),
       word({SwapLetter::mb(), SwapLetter::m(4), SwapLetter::m(4), SwapLetter::m(3),
             SwapLetter::m(3), SwapLetter::m(2), SwapLetter::m(2), SwapLetter::m(1),
             SwapLetter::m(1)})},
      {"(rho34 rho23 rho12)^4 = Mb M4^-4 M3^-4 M2^-4 M1^-4",
       power(word({r(3, 4), r(2, 3), r(1, 2)}), 4),
       compose(word({SwapLetter::mb()}),
               compose(compose(power(word({SwapLetter::m(4)}), -4),
                               power(word({SwapLetter::m(3)}), -4)),
                       compose(power(word({SwapLetter::m(2)}), -4),
                               power(word({SwapLetter::m(1)}), -4))))},
      {"rho12^2 = F12 boundary twist M2^-2 M1^-2", word({r(1, 2), r(1, 2)}), SwapWord(layout)},
  };

  CheckReport report;
  for (auto& rel : relations) {
    if (rel.name.starts_with("rho12^2")) {
      // The boundary of F_12 is not a letter of the calculus; compare the
      // branch-point braids and the lifted words directly.
      const int n = layout->strands();
      const int k = layout->cluster_width();
      const auto target = compose(full_twist_on(n, 1, 2 * k),
                                  compose(power(full_twist_on(n, k + 1, 2 * k), -2),
                                          power(full_twist_on(n, 1, k), -2)));
      report.checks.push_back({rel.name + " [exact]", equal(cable_braid(rel.lhs), target)});
      auto rhs = lift(full_twist_on(n, 1, 2 * k), layout->surface());
      rhs.append(expand(word({SwapLetter::m(2, -1), SwapLetter::m(2, -1),
                              SwapLetter::m(1, -1), SwapLetter::m(1, -1)})));
      report.checks.push_back({rel.name + " [homology]",
                               verify_homologically(expand(rel.lhs), rhs)});
      continue;
    }
    report.checks.push_back({rel.name + " [framed]", framed_equal(shadow(rel.lhs), shadow(rel.rhs))});
    report.checks.push_back({rel.name + " [exact]", exact_equal(rel.lhs, rel.rhs)});
    report.checks.push_back(
        {rel.name + " [homology]", verify_homologically(expand(rel.lhs), expand(rel.rhs))});
  }
  return report;
}

std::string to_string(const SwapLetter& letter) {
  const auto pair = "(" + std::to_string(letter.i) + "," + std::to_string(letter.j);
  std::string out;
  switch (letter.kind) {
    case SwapKind::Rho:
      out = "rho" + pair + ")";
      break;
    case SwapKind::Delta:
      out = "delta" + pair + ")";
      break;
    case SwapKind::RhoA:
      out = "rhoA" + pair + "; " + to_string(*letter.word) + ")";
      break;
    case SwapKind::Sub:
      out = "sub(" + to_string(*letter.word) + "; F" + std::to_string(letter.i) + ")";
      break;
    case SwapKind::M:
      out = "M(" + std::to_string(letter.i) + ")";
      break;
    case SwapKind::Mb:
      out = "Mb";
      break;
  }
  return letter.sign < 0 ? out + "^-1" : out;
}

std::string to_string(const SwapWord& w) {
  std::string out;
  for (const auto& letter : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(letter);
  }
  return out;
}

}  // namespace posfact
