#include "posfact/framed_braid.hpp"

#include <stdexcept>
#include <utility>

#include "posfact/garside.hpp"

namespace posfact {

FramedBraid::FramedBraid(int strands)
    : underlying_(strands),
      framings_(static_cast<std::size_t>(strands), 0) {}

FramedBraid::FramedBraid(BraidWord underlying, std::vector<std::int64_t> framings)
    : underlying_(std::move(underlying)), framings_(std::move(framings)) {
  if (static_cast<int>(framings_.size()) != underlying_.strands()) {
    throw std::invalid_argument("framing vector length must equal strand count");
  }
}

FramedBraid FramedBraid::pure_framing(int strands,
                                      std::vector<std::int64_t> framings) {
  return FramedBraid(BraidWord(strands), std::move(framings));
}

std::int64_t FramedBraid::total_framing() const {
  std::int64_t total = 0;
  for (auto f : framings_) total += f;
  return total;
}

FramedBraid fcompose(const FramedBraid& g, const FramedBraid& h) {
  if (g.strands() != h.strands()) {
    throw std::invalid_argument("fcompose: strand count mismatch");
  }
  const auto perm_h = end_permutation(h.underlying());
  std::vector<std::int64_t> framings(h.framings().size());
  for (std::size_t p = 0; p < framings.size(); ++p) {
    framings[p] = h.framings()[p] + g.framings()[perm_h[p]];
  }
  return FramedBraid(compose(g.underlying(), h.underlying()), std::move(framings));
}

FramedBraid finverse(const FramedBraid& x) {
  auto inv = inverse(x.underlying());
  const auto perm_inv = end_permutation(inv);
  std::vector<std::int64_t> framings(x.framings().size());
  for (std::size_t p = 0; p < framings.size(); ++p) {
    framings[p] = -x.framings()[perm_inv[p]];
  }
  return FramedBraid(std::move(inv), std::move(framings));
}

FramedBraid fpower(const FramedBraid& x, int exponent) {
  const FramedBraid base = exponent < 0 ? finverse(x) : x;
  FramedBraid out(x.strands());
  for (int k = 0; k < std::abs(exponent); ++k) out = fcompose(out, base);
  return out;
}

bool framed_equal(const FramedBraid& x, const FramedBraid& y) {
  if (x.strands() != y.strands()) {
    throw std::invalid_argument("framed_equal: strand count mismatch");
  }
  return x.framings() == y.framings() && equal(x.underlying(), y.underlying());
}

FramedBraid swap_framed(int i, int j, SwapFraming rule, int strands) {
  if (i < 1 || j <= i || j > strands) {
    throw std::invalid_argument("swap indices out of range: (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (j == i + 1) {
    std::vector<std::int64_t> framings(static_cast<std::size_t>(strands), 0);
    framings[i - 1] = rule.lower;
    framings[i] = rule.upper;
    return FramedBraid(BraidWord::generator(strands, i), std::move(framings));
  }
  const auto step = swap_framed(i, i + 1, rule, strands);
  return fcompose(fcompose(finverse(step), swap_framed(i + 1, j, rule, strands)),
                  step);
}

FramedBraid delta_framed(int i, int j, int strands) {
  if (j != i + 1) {
    throw std::invalid_argument("delta_framed takes an adjacent pair");
  }
  return swap_framed(i, j, kDeltaFraming, strands);
}

FramedBraid rho_framed(int i, int j, int strands) {
  return swap_framed(i, j, kRhoFraming, strands);
}

FramedBraid boundary_multitwist_framed(int n) {
  if (n < 2) {
    throw std::invalid_argument("boundary_multitwist_framed requires n >= 2");
  }
  return FramedBraid(full_twist(n), std::vector<std::int64_t>(n, 1));
}

FramedBraid boundary_framing(int strands, int strand, int exponent) {
  if (strand < 1 || strand > strands) {
    throw std::invalid_argument("boundary_framing: strand out of range");
  }
  std::vector<std::int64_t> framings(static_cast<std::size_t>(strands), 0);
  framings[strand - 1] = exponent;
  return FramedBraid::pure_framing(strands, std::move(framings));
}

bool RelationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

const RelationCheck* RelationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

FramedBraid product(std::initializer_list<FramedBraid> factors) {
  FramedBraid out(4);
  for (const auto& f : factors) out = fcompose(out, f);
  return out;
}

RelationCheck check(std::string name, const FramedBraid& lhs, const FramedBraid& rhs) {
  RelationCheck c;
  c.name = std::move(name);
  c.braid_part = equal(lhs.underlying(), rhs.underlying());
  c.framing_part = lhs.framings() == rhs.framings();
  return c;
}

FramedBraid boundary_side(int exponent) {
  auto out = boundary_multitwist_framed(4);
  for (int s = 4; s >= 1; --s) {
    out = fcompose(out, boundary_framing(4, s, exponent));
  }
  return out;
}

}  // namespace

RelationReport verify_swap_braid_relations(SwapFraming delta_rule,
                                           SwapFraming rho_rule) {
  const auto r = [&](int i, int j) { return swap_framed(i, j, rho_rule); };
  const auto d = [&](int i, int j) { return swap_framed(i, j, delta_rule); };

  RelationReport report;
  auto& out = report.checks;
  out.push_back(check("rho12 rho23 rho12 = rho23 rho12 rho23",
                      product({r(1, 2), r(2, 3), r(1, 2)}),
                      product({r(2, 3), r(1, 2), r(2, 3)})));
  out.push_back(check("rho23 rho34 rho23 = rho34 rho23 rho34",
                      product({r(2, 3), r(3, 4), r(2, 3)}),
                      product({r(3, 4), r(2, 3), r(3, 4)})));
  out.push_back(check("rho12^-1 rho23 rho12 = rho23 rho12 rho23^-1",
                      product({finverse(r(1, 2)), r(2, 3), r(1, 2)}),
                      product({r(2, 3), r(1, 2), finverse(r(2, 3))})));
  out.push_back(check("rho23^-1 rho34 rho23 = rho34 rho23 rho34^-1",
                      product({finverse(r(2, 3)), r(3, 4), r(2, 3)}),
                      product({r(3, 4), r(2, 3), finverse(r(3, 4))})));
  out.push_back(check("rho12 rho34 = rho34 rho12", product({r(1, 2), r(3, 4)}),
                      product({r(3, 4), r(1, 2)})));
  out.push_back(check("(delta34 delta23 delta12)^4 = Mb M4^2 M3^2 M2^2 M1^2",
                      fpower(product({d(3, 4), d(2, 3), d(1, 2)}), 4),
                      boundary_side(2)));
  out.push_back(check("(rho34 rho23 rho12)^4 = Mb M4^-4 M3^-4 M2^-4 M1^-4",
                      fpower(product({r(3, 4), r(2, 3), r(1, 2)}), 4),
                      boundary_side(-4)));

  // Each strand takes part in exactly six of the twelve swaps.
  const auto word = power(BraidWord(4, {{3, 1}, {2, 1}, {1, 1}}), 4);
  std::vector<int> position = {0, 1, 2, 3};
  std::vector<int> touches(4, 0);
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    const int a = it->index - 1;
    for (int s = 0; s < 4; ++s) {
      if (position[s] == a || position[s] == a + 1) {
        ++touches[s];
        position[s] = position[s] == a ? a + 1 : a;
      }
    }
  }
  RelationCheck count{"each strand takes part in 6 swaps", true, true};
  for (int t : touches) count.braid_part = count.framing_part = count.braid_part && t == 6;
  out.push_back(count);
  return report;
}

std::string to_string(const FramedBraid& x) {
  std::string out = "(" + to_string(x.underlying()) + "; (";
  for (std::size_t k = 0; k < x.framings().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(x.framings()[k]);
  }
  return out + "))";
}

}  // namespace posfact
