#include "posfact/invariants.hpp"

#include <stdexcept>
#include <utility>

namespace posfact {

std::int64_t euler_closed(int genus, std::int64_t n_cycles) {
  if (genus < 0 || n_cycles < 0) {
    throw std::invalid_argument("euler_closed needs genus >= 0 and n_cycles >= 0");
  }
  return 4 - 4 * static_cast<std::int64_t>(genus) + n_cycles;
}

std::int64_t euler_filling(int genus, int boundaries, std::int64_t n_cycles) {
  if (boundaries < 1) throw std::invalid_argument("euler_filling needs at least one boundary component");
  if (genus < 0 || n_cycles < 0) {
    throw std::invalid_argument("euler_filling needs genus >= 0 and n_cycles >= 0");
  }
  return 2 - 2 * static_cast<std::int64_t>(genus) - boundaries + n_cycles;
}

std::vector<BigInt> smith_normal_form(const BigMatrix& m) {
  BigMatrix a = m;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
  }
  const std::size_t diag = std::min(rows, cols);

  const auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] += q * a[src][j];
  };
  const auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] += q * a[i][src];
  };

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // smallest non-zero entry of the remaining block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) break;
      std::swap(a[t], a[pi]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        add_row(i, t, BigInt(-(a[i][t] / a[t][t])));
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, BigInt(-(a[t][j] / a[t][t])));
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      add_row(t, bad, BigInt(1));
    }
  }

  std::vector<BigInt> out(diag);
  for (std::size_t t = 0; t < diag; ++t) out[t] = abs(a[t][t]);
  return out;
}

namespace {

// Chain coordinates on the surface with two boundary components, pushed to
// the closed fiber: c_{2g+1} = -(c_1 + c_3 + ... + c_{2g-1}).
HomologyClass capped(const HomologyClass& x, int genus) {
  HomologyClass out(x.begin(), x.begin() + 2 * genus);
  const auto last = x[static_cast<std::size_t>(2 * genus)];
  for (int k = 0; k < 2 * genus; k += 2) out[static_cast<std::size_t>(k)] -= last;
  return out;
}

}  // namespace

BettiResult b1_of_total_space(const TwistWord& f, bool cap) {
  const auto& surface = *f.surface();
  const bool project = cap && surface.rank() == 2 * surface.genus() + 1;
  BettiResult out;
  out.fiber_rank = project ? 2 * surface.genus() : surface.rank();

  BigMatrix m;
  for (std::size_t k = 0; k < f.size(); ++k) {
    auto x = curve_class(surface, f.letters()[k].curve);
    if (project) x = capped(x, surface.genus());
    bool zero = true;
    std::vector<BigInt> row;
    for (auto v : x) {
      zero = zero && v == 0;
      row.emplace_back(v);
    }
    if (zero) out.zero_class_letters.push_back(k);
    m.push_back(std::move(row));
  }

  int rank = 0;
  if (!m.empty()) {
    for (const auto& d : smith_normal_form(m)) {
      if (d == 0) continue;
      ++rank;
      if (d != 1) out.torsion.push_back(d);
    }
  }
  out.b1 = out.fiber_rank - rank;
  return out;
}

BettiResult b1_of_total_space(const PositiveFactorization& f, bool cap) {
  return b1_of_total_space(f.word(), cap);
}

BigRational endo_signature(int genus, std::int64_t n_nonseparating,
                           const std::vector<std::int64_t>& separating) {
  if (genus < 1) throw std::invalid_argument("endo_signature needs genus >= 1");
  if (static_cast<int>(separating.size()) > genus / 2) {
    throw std::invalid_argument("endo_signature: separating counts are indexed 1..floor(g/2)");
  }
  const BigInt g = genus;
  const BigInt denom = 2 * g + 1;
  BigRational sigma = -BigRational(g + 1, denom) * BigRational(n_nonseparating);
  for (std::size_t k = 0; k < separating.size(); ++k) {
    const BigInt j = static_cast<long long>(k + 1);
    sigma += (BigRational(4 * j * (g - j), denom) - 1) * BigRational(separating[k]);
  }
  return sigma;
}

HyperellipticVerdict hyperelliptic_obstruction(int genus, std::int64_t n_nonseparating,
                                               const std::vector<std::int64_t>& separating) {
  const auto sigma = endo_signature(genus, n_nonseparating, separating);
  return denominator(sigma) == 1 ? HyperellipticVerdict::Inconclusive
                                 : HyperellipticVerdict::NotHyperelliptic;
}

FibrationInvariants fibration_invariants(const TwistWord& f) {
  const auto& surface = *f.surface();
  FibrationInvariants out;
  out.genus = surface.genus();
  out.boundaries = surface.boundaries();
  out.n_cycles = static_cast<std::int64_t>(f.size());
  out.euler_closed = euler_closed(out.genus, out.n_cycles);
  if (out.boundaries >= 1) out.euler_filling = euler_filling(out.genus, out.boundaries, out.n_cycles);

  auto betti = b1_of_total_space(f, true);
  out.b1 = betti.b1;
  out.torsion = std::move(betti.torsion);
  out.zero_class_letters = std::move(betti.zero_class_letters);

  const auto nonseparating =
      out.n_cycles - static_cast<std::int64_t>(out.zero_class_letters.size());
  out.endo_sigma = endo_signature(out.genus, nonseparating);
  out.hyperelliptic_verdict = out.zero_class_letters.empty()
                                  ? hyperelliptic_obstruction(out.genus, nonseparating)
                                  : HyperellipticVerdict::Inconclusive;
  return out;
}

std::string to_string(HyperellipticVerdict v) {
  return v == HyperellipticVerdict::NotHyperelliptic ? "NotHyperelliptic" : "Inconclusive";
}

}  // namespace posfact
