#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posfact/constructions.hpp"

namespace posfact {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Euler characteristic of the closed Lefschetz fibration over the sphere
/// with fiber genus g and n_cycles singular fibers.
std::int64_t euler_closed(int genus, std::int64_t n_cycles);

/// Euler characteristic of the fibration over the disk with fiber of genus
/// g and s >= 1 boundary components.
std::int64_t euler_filling(int genus, int boundaries, std::int64_t n_cycles);

/// Invariant factors d_1 | d_2 | ... of an integer matrix, one per diagonal
/// position (min(rows, cols) entries, non-negative, zeros last).
std::vector<BigInt> smith_normal_form(const BigMatrix& m);

struct BettiResult {
  int b1 = 0;
  std::vector<BigInt> torsion;  // invariant factors other than 0 and 1
  int fiber_rank = 0;
  /// Letters whose class vanishes in the fiber homology. On the closed
  /// fiber these are separating curves, or a sign of bad bookkeeping.
  std::vector<std::size_t> zero_class_letters;
};

/// H_1 of the total space as the fiber homology modulo the vanishing
/// classes. With cap = true the boundary components of the fiber are
/// capped off (rank 2g); otherwise the fiber keeps its boundary.
BettiResult b1_of_total_space(const TwistWord& f, bool cap = true);
BettiResult b1_of_total_space(const PositiveFactorization& f, bool cap = true);

/// -(g+1)/(2g+1) N + sum_j (4j(g-j)/(2g+1) - 1) s_j, with s indexed from
/// j = 1 up to floor(g/2).
BigRational endo_signature(int genus, std::int64_t n_nonseparating,
                           const std::vector<std::int64_t>& separating = {});

enum class HyperellipticVerdict { NotHyperelliptic, Inconclusive };

/// A hyperelliptic fibration has integral Endo signature.
HyperellipticVerdict hyperelliptic_obstruction(int genus, std::int64_t n_nonseparating,
                                               const std::vector<std::int64_t>& separating = {});

struct FibrationInvariants {
  int genus = 0;
  int boundaries = 0;
  std::int64_t n_cycles = 0;
  std::int64_t euler_closed = 0;
  std::optional<std::int64_t> euler_filling;  // unset for a closed fiber
  int b1 = 0;
  std::vector<BigInt> torsion;
  std::vector<std::size_t> zero_class_letters;
  BigRational endo_sigma;
  HyperellipticVerdict hyperelliptic_verdict = HyperellipticVerdict::Inconclusive;
};

/// All invariants of the closed fibration given by a factorization of the
/// boundary multitwist. Zero-class letters have unknown separating genus,
/// so their presence makes the verdict Inconclusive.
FibrationInvariants fibration_invariants(const TwistWord& f);

std::string to_string(HyperellipticVerdict v);

}  // namespace posfact
