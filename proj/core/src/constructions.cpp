#include "posfact/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include <boost/container_hash/hash.hpp>

namespace posfact {
namespace {

bool same_letter(const TwistLetter& a, const TwistLetter& b) {
  if (a.sign != b.sign || a.curve.base != b.curve.base) return false;
  if (a.curve.conjugator == b.curve.conjugator) return true;
  if (!a.curve.conjugator || !b.curve.conjugator) return false;
  return to_string(a.curve) == to_string(b.curve);
}

bool same_word(const TwistWord& a, const TwistWord& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!same_letter(a.letters()[k], b.letters()[k])) return false;
  }
  return true;
}

TwistWord free_reduce(const TwistWord& w) {
  std::vector<TwistLetter> stack;
  for (const auto& letter : w.letters()) {
    if (!stack.empty()) {
      auto flipped = stack.back();
      flipped.sign = -flipped.sign;
      if (same_letter(flipped, letter)) {
        stack.pop_back();
        continue;
      }
    }
    stack.push_back(letter);
  }
  return TwistWord(w.surface(), std::move(stack));
}

TwistWord named(const SurfacePtr& surface, std::initializer_list<std::pair<NamedCurve, int>> letters) {
  TwistWord out(surface);
  for (auto [c, sign] : letters) out.push_back({Curve{c, nullptr}, sign});
  return out;
}

void require_positive(const SwapLetter& letter) {
  if (letter.sign != 1 || (letter.word && !letter.word->all_positive())) {
    throw std::invalid_argument("insertions must be positive, got " + to_string(letter));
  }
}

bool has_ambient_boundary(const TwistWord& w) {
  for (const auto& letter : w.letters()) {
    if (letter.curve.base.kind == CurveKind::Boundary) return true;
    if (letter.curve.conjugator && has_ambient_boundary(letter.curve.conjugator->word)) {
      return true;
    }
  }
  return false;
}

// A = t_{c1}^{sign m} t_{d1}^{-sign m}
TwistWord twist_pair(const SurfacePtr& surface, int m, int sign) {
  auto out = power(TwistWord::twist(surface, NamedCurve::chain(1), sign), m);
  out.append(power(TwistWord::twist(surface, NamedCurve::d(1), -sign), m));
  return out;
}

}  // namespace

PositiveFactorization::PositiveFactorization(std::string target, TwistWord word,
                                             std::vector<std::string> notes)
    : target_(std::move(target)), word_(std::move(word)), notes_(std::move(notes)) {
  if (!word_.all_positive()) {
    throw std::invalid_argument("positive factorization contains a negative twist");
  }
  if (!notes_.empty() && notes_.size() != word_.size()) {
    throw std::invalid_argument("positive factorization needs one note per letter");
  }
}

TwistWord word_T(SurfacePtr surface) {
  if (!surface) surface = make_surface(2, 2);
  const auto c = [](int k) { return std::pair{NamedCurve::chain(k), 1}; };
  return named(surface, {c(2), c(3), c(1), c(2), c(3), c(1), c(2), c(3), c(1), c(2)});
}

const PsiSearch& make_psi(std::uint64_t seed, int max_depth) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, int>, PsiSearch> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find({seed, max_depth}); it != cache.end()) return it->second;

  const auto surface = make_surface(2, 2);
  const int rank = surface->rank();
  std::vector<TwistLetter> gens;
  std::vector<NamedCurve> curves;
  for (int k = 1; k <= 5; ++k) curves.push_back(NamedCurve::chain(k));
  curves.push_back(NamedCurve::d(1));
  curves.push_back(NamedCurve::d(2));
  for (const auto& c : curves) {
    gens.push_back({Curve{c, nullptr}, 1});
    gens.push_back({Curve{c, nullptr}, -1});
  }
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(gens.begin(), gens.end(), rng);
  }
  std::vector<IntMatrix> actions;
  for (const auto& g : gens) actions.push_back(twist_action(*surface, g.curve, g.sign));

  using State = std::vector<std::int64_t>;  // (u, v) stacked
  const auto c1 = surface->named_class(NamedCurve::chain(1));
  const auto d1 = surface->named_class(NamedCurve::d(1));
  const auto d2 = surface->named_class(NamedCurve::d(2));
  const auto c3 = surface->named_class(NamedCurve::chain(3));
  const auto negated = [](HomologyClass x) {
    for (auto& v : x) v = -v;
    return x;
  };
  const auto split = [rank](const State& s) {
    return std::pair{HomologyClass(s.begin(), s.begin() + rank),
                     HomologyClass(s.begin() + rank, s.end())};
  };
  const auto is_target = [&](const State& s) {
    auto [u, v] = split(s);
    return (u == d2 || u == negated(d2)) && (v == c3 || v == negated(c3));
  };

  struct Node {
    State state;
    std::size_t parent;
    int gen;
  };
  std::vector<Node> nodes;
  std::unordered_map<State, std::size_t, boost::hash<State>> seen;
  State start = c1;
  start.insert(start.end(), d1.begin(), d1.end());
  nodes.push_back({start, 0, -1});
  seen.emplace(start, 0);

  std::optional<std::size_t> found;
  if (is_target(start)) found = 0;
  std::size_t level_begin = 0;
  for (int depth = 0; depth < max_depth && !found; ++depth) {
    const std::size_t level_end = nodes.size();
    for (std::size_t n = level_begin; n < level_end && !found; ++n) {
      auto [u, v] = split(nodes[n].state);
      for (std::size_t g = 0; g < actions.size(); ++g) {
        State next = actions[g] * u;
        const auto image_v = actions[g] * v;
        next.insert(next.end(), image_v.begin(), image_v.end());
        if (seen.contains(next)) continue;
        seen.emplace(next, nodes.size());
        nodes.push_back({std::move(next), n, static_cast<int>(g)});
        if (is_target(nodes.back().state)) {
          found = nodes.size() - 1;
          break;
        }
      }
    }
    level_begin = level_end;
  }
  if (!found) {
    throw std::runtime_error("psi search exhausted at depth " + std::to_string(max_depth) +
                             " after " + std::to_string(nodes.size()) + " states");
  }

  // The generator applied last is the leftmost letter.
  PsiSearch result;
  result.word = TwistWord(surface);
  for (std::size_t n = *found; nodes[n].gen >= 0; n = nodes[n].parent) {
    result.word.push_back(gens[static_cast<std::size_t>(nodes[n].gen)]);
  }
  std::tie(result.image_c1, result.image_d1) = split(nodes[*found].state);
  result.states_visited = nodes.size();
  return cache.emplace(std::pair{seed, max_depth}, std::move(result)).first->second;
}

std::pair<TwistWord, TwistWord> commutator_relation(int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("commutator_relation requires m >= 1");
  const auto surface = make_surface(2, 2);
  const auto& psi = make_psi(seed).word;
  const auto a = twist_pair(surface, m, -1);
  auto c = compose(compose(psi, a), compose(inverse(psi), inverse(a)));
  return {power(word_T(surface), m), std::move(c)};
}

SwapWord phi(int l) {
  return SwapWord(make_layout(l), {SwapLetter::rho(2, 4), SwapLetter::rho(1, 3),
                                   SwapLetter::rho(3, 4), SwapLetter::rho(2, 3),
                                   SwapLetter::rho(1, 2)});
}

PushResult push_subsurface_letters(const SwapWord& w) {
  const auto& layout = w.layout();
  PushResult out;
  for (auto& p : out.prefixes) p = TwistWord(layout->subsurface());
  out.swaps = SwapWord(layout);

  const auto push_sub = [&](const TwistWord& x, int index) {
    int j = index;
    const auto& swaps = out.swaps.letters();
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
      if (it->kind != SwapKind::Rho && it->kind != SwapKind::Delta) continue;
      if (j == it->i) {
        j = it->j;
      } else if (j == it->j) {
        j = it->i;
      }
    }
    out.prefixes[static_cast<std::size_t>(j)].append(x);
  };

  const auto spelled = adjacent_spelling(w);
  for (const auto& letter : spelled.letters()) {
    if (letter.kind == SwapKind::Sub) {
      push_sub(letter.sign > 0 ? *letter.word : inverse(*letter.word), letter.i);
    } else {
      out.swaps.push_back(letter);
    }
  }
  for (auto& p : out.prefixes) p = free_reduce(p);
  return out;
}

namespace {

// Non-adjacent rho letters come back from adjacent_spelling split up;
// merge rho_{i,i+1}^-1 rho_{i+1,j} rho_{i,i+1} back into rho_{ij}.
SwapWord merge_rho(const SwapWord& w) {
  std::vector<SwapLetter> out;
  for (const auto& letter : w.letters()) {
    out.push_back(letter);
    bool changed = true;
    while (changed && out.size() >= 3) {
      changed = false;
      const auto& a = out[out.size() - 3];
      const auto& b = out[out.size() - 2];
      const auto& c = out[out.size() - 1];
      const bool rhos = a.kind == SwapKind::Rho && b.kind == SwapKind::Rho &&
                        c.kind == SwapKind::Rho;
      if (rhos && a.sign == -1 && c.sign == 1 && b.sign == 1 && a.i == c.i && a.j == c.j &&
          a.j == a.i + 1 && b.i == a.j) {
        const auto merged = SwapLetter::rho(a.i, b.j);
        out.resize(out.size() - 3);
        out.push_back(merged);
        changed = true;
      }
    }
  }
  return SwapWord(w.layout(), std::move(out));
}

bool same_swaps(const SwapWord& a, const SwapWord& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& x = a.letters()[k];
    const auto& y = b.letters()[k];
    if (x.kind != y.kind || x.i != y.i || x.j != y.j || x.sign != y.sign) return false;
  }
  return true;
}

}  // namespace

PositiveFactorization phi_factorization(int m, int l, std::uint64_t seed) {
  if (m < 0) throw std::invalid_argument("phi_factorization requires m >= 0");
  const auto layout = make_layout(l);
  const auto& sub = layout->subsurface();
  const auto psi = transport(make_psi(seed).word, sub);

  // A' = t_{c1}^m t_{d1}^-m and B = psi^-1, so that the prefix produced by
  // moving the subsurface letters to the front is psi A'^-1 psi^-1 A', which
  // cancels T^m.
  const auto a = twist_pair(sub, m, 1);
  const auto b = inverse(psi);
  const auto bi = psi;
  const auto ai = inverse(a);

  SwapWord p(layout, {SwapLetter::sub(compose(compose(bi, ai), b), 1),
                      SwapLetter::sub(compose(bi, ai), 2), SwapLetter::sub(bi, 3)});
  SwapWord core(layout, {SwapLetter::rho_a(2, 4, b), SwapLetter::rho_a(1, 3, a),
                         SwapLetter::rho(3, 4), SwapLetter::rho(2, 3), SwapLetter::rho(1, 2)});

  const auto pushed = push_subsurface_letters(compose(compose(p, core), inverse(p)));
  const auto expected_prefix = free_reduce(compose(compose(bi, ai), compose(b, a)));
  bool ok = same_word(pushed.prefixes[1], expected_prefix) &&
            same_swaps(merge_rho(pushed.swaps), phi(l));
  for (int i = 2; i <= 4; ++i) ok = ok && pushed.prefixes[static_cast<std::size_t>(i)].empty();
  if (!ok) {
    throw std::logic_error("phi_factorization: rewriting did not reduce to the commutator prefix");
  }

  const auto t = power(word_T(sub), m);
  TwistWord word = embed(t, 1, *layout);
  std::vector<std::string> notes(word.size(), "T^" + std::to_string(m) + " on F1");
  const auto conj = expand(p);
  for (const auto& letter : core.letters()) {
    const auto piece = conjugate_letters(conj, expand(letter, *layout));
    word.append(piece);
    std::string note = letter.kind == SwapKind::RhoA
                           ? "rho(" + std::to_string(letter.i) + "," + std::to_string(letter.j) +
                                 ")^" + (letter.i == 2 ? "B" : "A")
                           : to_string(letter);
    notes.insert(notes.end(), piece.size(), "P " + note + " P^-1");
  }
  return PositiveFactorization("Phi (l=" + std::to_string(l) + ")", std::move(word),
                               std::move(notes));
}

TwistAppend insert_equals_append(const TwistWord& w,
                                 const std::vector<std::pair<std::size_t, TwistLetter>>& insertions) {
  auto sorted = insertions;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [pos, letter] : sorted) {
    if (pos > w.size()) throw std::invalid_argument("insertion position past the end of the word");
    if (letter.sign != 1) {
      throw std::invalid_argument("insertions must be positive, got " + to_string(letter));
    }
  }

  TwistAppend out{TwistWord(w.surface()), TwistWord(w.surface()), TwistWord(w.surface())};
  TwistWord prefix(w.surface());
  std::shared_ptr<const Conjugator> shared;
  std::size_t next = 0;
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    shared.reset();
    for (; next < sorted.size() && sorted[next].first == pos; ++next) {
      const auto& x = sorted[next].second;
      out.in_place.push_back(x);
      if (!x.curve.is_named()) {
        out.w_tilde.push_back({image(prefix, x.curve), 1});
        continue;
      }
      if (!shared && !prefix.empty()) shared = std::make_shared<const Conjugator>(prefix);
      out.w_tilde.push_back({derived(shared, x.curve.base), 1});
    }
    if (pos < w.size()) {
      out.in_place.push_back(w.letters()[pos]);
      prefix.push_back(w.letters()[pos]);
    }
  }
  out.full = compose(out.w_tilde, w);
  return out;
}

SwapAppend insert_equals_append(const SwapWord& w,
                                const std::vector<std::pair<std::size_t, SwapLetter>>& insertions) {
  auto sorted = insertions;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [pos, letter] : sorted) {
    if (pos > w.size()) throw std::invalid_argument("insertion position past the end of the word");
    require_positive(letter);
  }

  const auto& layout = w.layout();
  SwapAppend out{SwapWord(layout), SwapWord(layout), TwistWord(layout->surface())};
  SwapWord prefix(layout);
  std::size_t next = 0;
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    for (; next < sorted.size() && sorted[next].first == pos; ++next) {
      const auto& x = sorted[next].second;
      out.in_place.push_back(x);
      out.w_tilde_skeleton.append(prefix);
      out.w_tilde_skeleton.push_back(x);
      out.w_tilde_skeleton.append(inverse(prefix));
      out.w_tilde.append(conjugate_letters(expand(prefix), expand(x, *layout)));
    }
    if (pos < w.size()) {
      out.in_place.push_back(w.letters()[pos]);
      prefix.push_back(w.letters()[pos]);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, SwapLetter>> phi_insertions() {
  const auto r = [](int i, int j) { return SwapLetter::rho(i, j); };
  return {{0, r(3, 4)}, {0, r(2, 3)}, {0, r(1, 2)}, {0, r(2, 3)},
          {1, r(1, 2)}, {1, r(1, 2)}, {1, r(3, 4)}};
}

PositiveFactorization boundary_multitwist_factorization(int m, int l, std::uint64_t seed) {
  const auto layout = make_layout(l);
  const auto base = phi(l);
  const auto app = insert_equals_append(base, phi_insertions());
  const auto cycle = SwapWord(layout, {SwapLetter::rho(3, 4), SwapLetter::rho(2, 3),
                                       SwapLetter::rho(1, 2)});
  if (!framed_equal(shadow(app.in_place), shadow(power(cycle, 4)))) {
    throw std::logic_error("inserted word does not equal (rho34 rho23 rho12)^4");
  }

  const auto phi_part = phi_factorization(m, l, seed);
  SwapWord ms(layout);
  for (int i = 4; i >= 1; --i) ms.append(power(SwapWord(layout, {SwapLetter::m(i)}), 4));

  TwistWord word = app.w_tilde;
  std::vector<std::string> notes(word.size(), "conjugated insertion");
  word.append(phi_part.word());
  notes.insert(notes.end(), phi_part.notes().begin(), phi_part.notes().end());
  for (const auto& letter : ms.letters()) {
    const auto piece = expand(letter, *layout);
    word.append(piece);
    notes.insert(notes.end(), piece.size(), to_string(letter));
  }

  SwapWord skeleton = app.w_tilde_skeleton;
  skeleton.append(base);
  skeleton.append(ms);
  PositiveFactorization out("boundary multitwist, genus " + std::to_string(layout->genus()),
                            std::move(word), std::move(notes));
  out.set_skeleton(std::move(skeleton));
  return out;
}

PositiveFactorization extend_to_genus(int target_genus, const PositiveFactorization& base) {
  const auto& surface = base.word().surface();
  if (!surface || !surface->layout()) {
    throw std::invalid_argument("extend_to_genus needs a factorization on a layout surface");
  }
  const int g = surface->genus();
  if (target_genus <= 11 || target_genus <= g) {
    throw std::invalid_argument("extend_to_genus: target genus " + std::to_string(target_genus) +
                                " must exceed " + std::to_string(std::max(g, 11)));
  }
  if (has_ambient_boundary(base.word())) {
    throw std::invalid_argument("extend_to_genus: base uses ambient boundary twists");
  }

  const auto host = make_layout(*surface->layout())->host_surface(target_genus);
  const int top = 2 * target_genus + 1;
  const auto small = power(chain_word(host, 1, 2 * g + 1), 2 * g + 2);

  std::vector<std::pair<std::size_t, TwistLetter>> insertions;
  const auto letter = [&](int k) { return TwistLetter{Curve{NamedCurve::chain(k), nullptr}, 1}; };
  for (int block = 1; block <= 2 * g + 2; ++block) {
    const auto pos = static_cast<std::size_t>(block * (2 * g + 1));
    for (int k = 2 * g + 2; k <= top; ++k) insertions.emplace_back(pos, letter(k));
  }
  for (int block = 2 * g + 3; block <= 2 * target_genus + 2; ++block) {
    for (int k = 1; k <= top; ++k) insertions.emplace_back(small.size(), letter(k));
  }
  const auto app = insert_equals_append(small, insertions);
  if (!same_word(app.in_place, power(chain_word(host, 1, top), 2 * target_genus + 2))) {
    throw std::logic_error("extend_to_genus: chain words do not nest");
  }

  TwistWord word = app.w_tilde;
  std::vector<std::string> notes(word.size(), "chain extension");
  word.append(transport(base.word(), host));
  if (base.notes().empty()) {
    notes.insert(notes.end(), base.length(), "");
  } else {
    notes.insert(notes.end(), base.notes().begin(), base.notes().end());
  }
  return PositiveFactorization("boundary multitwist, genus " + std::to_string(target_genus),
                               std::move(word), std::move(notes));
}

}  // namespace posfact
