#include "posfact/lift.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "posfact/garside.hpp"

namespace posfact {
namespace {

SurfacePtr cover_of(int strands, SurfacePtr surface) {
  if (strands % 2 != 0 || strands < 2) {
    throw std::invalid_argument("lift needs an even strand count, got " +
                                std::to_string(strands));
  }
  const int g = (strands - 2) / 2;
  if (!surface) return make_surface(g, 2);
  if (surface->genus() != g || surface->boundaries() != 2) {
    throw std::invalid_argument("surface is not the double cover of the " +
                                std::to_string(strands) + "-punctured disk");
  }
  return surface;
}

// Positive permutation braid moving block i (positions (i-1)w+1..iw) past
// block i+1.
BraidWord block_crossing(int strands, int i, int width) {
  std::vector<int> image(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) image[p] = p;
  const int start = (i - 1) * width;
  for (int a = 0; a < width; ++a) {
    image[start + a] = start + width + a;
    image[start + width + a] = start + a;
  }
  return PermutationFactor(std::move(image)).to_word();
}

}  // namespace

TwistWord lift(const BraidWord& w, SurfacePtr surface) {
  surface = cover_of(w.strands(), std::move(surface));
  TwistWord out(surface);
  for (auto letter : w.letters()) {
    out.push_back({Curve{NamedCurve::chain(letter.index), nullptr}, letter.sign});
  }
  return out;
}

Curve lift_band(const BraidWord& conjugator, int index, const SurfacePtr& surface) {
  return derived(lift(conjugator, surface), NamedCurve::chain(index));
}

BraidWord cable(const FramedBraid& x, int width) {
  if (width < 1) throw std::invalid_argument("cable width must be positive");
  const int n = x.strands() * width;
  BraidWord out(n);
  for (auto letter : x.underlying().letters()) {
    const auto crossing = block_crossing(n, letter.index, width);
    out.append(letter.sign > 0 ? crossing : inverse(crossing));
  }
  if (width > 1) {
    for (int p = 0; p < x.strands(); ++p) {
      out.append(power(full_twist_on(n, p * width + 1, (p + 1) * width),
                       static_cast<int>(x.framings()[p])));
    }
  }
  return out;
}

bool verify_delta_square_lift(int g) {
  if (g < 1) throw std::invalid_argument("verify_delta_square_lift requires g >= 1");
  return verify_delta_square_lift(g, full_twist(2 * g + 2));
}

bool verify_delta_square_lift(int g, const BraidWord& candidate) {
  if (g < 1) throw std::invalid_argument("verify_delta_square_lift requires g >= 1");
  const auto surface = make_surface(g, 2);
  auto boundary = TwistWord::twist(surface, NamedCurve::boundary(1));
  boundary.append(TwistWord::twist(surface, NamedCurve::boundary(2)));
  const bool homology = verify_homologically(lift(candidate, surface), boundary);
  const bool framed = equal(candidate, cable(boundary_multitwist_framed(2), g + 1));
  return homology && framed;
}

BraidWord swap_braid(int gp) {
  if (gp < 1) throw std::invalid_argument("swap braid requires gp >= 1");
  const int k = 2 * gp + 2;
  const int n = 2 * k;
  return compose(compose(half_twist(n), inverse(full_twist_on(n, 1, k))),
                 inverse(full_twist_on(n, k + 1, n)));
}

BraidWord BandFactorization::band_word(std::size_t k) const {
  return band(indices.at(k), indices.at(k) + 1, conjugators.at(k));
}

BraidWord BandFactorization::product() const {
  BraidWord out(strands);
  for (std::size_t k = 0; k < size(); ++k) out.append(band_word(k));
  return out;
}

const BandFactorization& rho_band_factorization(int gp) {
  if (gp < 1) throw std::invalid_argument("rho_band_factorization requires gp >= 1");
  static std::mutex mutex;
  static std::map<int, BandFactorization> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(gp); it != cache.end()) return it->second;

  const int k = 2 * gp + 2;
  BandFactorization f;
  f.gp = gp;
  f.strands = 2 * k;
  // Band j joins the two middle strands through j-1 nested crossing pairs,
  // outermost pair first.
  for (int j = 1; j <= k; ++j) {
    BraidWord w(f.strands);
    for (int t = j - 1; t >= 1; --t) {
      w.push_back({k - t, 1});
      w.push_back({k + t, 1});
    }
    f.conjugators.push_back(std::move(w));
    f.indices.push_back(k);
  }
  if (!equal(f.product(), swap_braid(gp))) {
    throw std::logic_error("band factorization failed certification for gp=" +
                           std::to_string(gp));
  }
  return cache.emplace(gp, std::move(f)).first->second;
}

TwistWord lift_bands(const BandFactorization& bands, const SurfacePtr& surface, int offset) {
  const int n = 2 * surface->genus() + 2;
  TwistWord out(surface);
  for (std::size_t k = 0; k < bands.size(); ++k) {
    const auto conj = shifted(bands.conjugators[k], offset, n);
    out.push_back({lift_band(conj, bands.indices[k] + offset, surface), 1});
  }
  return out;
}

}  // namespace posfact
