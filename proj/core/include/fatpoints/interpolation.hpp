#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <fatpoints/exactnum.hpp>

namespace fatpoints::interpolation {

using exactnum::BigInt;
using exactnum::Rational;

/// Default modulus 2^31 - 1: word-sized arithmetic with negligible chance
/// that random points behave non-generically; configurable for cross-checks.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

/// A validated field modulus: prime and 3 <= p < 2^62.
class PrimeModulus {
 public:
  /// Throws std::invalid_argument unless p is prime and in range.
  static PrimeModulus checked(std::uint64_t p);

  std::uint64_t value() const { return p_; }

 private:
  explicit PrimeModulus(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// A point of projective n-space confined to the affine chart x_0 = 1.
struct ProjectivePoint {
  /// n+1 entries reduced mod p, coords[0] == 1.
  std::vector<std::uint64_t> coords;
};

/// s pairwise-distinct points of P^n over GF(prime).
struct PointSet {
  unsigned n = 1;
  std::uint64_t prime = kDefaultPrime;
  std::vector<ProjectivePoint> points;
};

/// Deterministically samples s distinct points [1 : a_1 : ... : a_n] with
/// the a_i drawn from a single splitmix64 stream seeded by `seed`, reduced
/// into [0, p) by rejection above the largest multiple of p.  Colliding
/// points are resampled wholesale.  Identical (n, s, prime, seed) always
/// yields the identical PointSet.  Requires 1 <= s <= p^n.
PointSet sample_points(unsigned n, const BigInt& s, const PrimeModulus& prime,
                       std::uint64_t seed);

/// All exponent vectors (a_0, ..., a_n) with sum d, in graded-lex order
/// with x_0 > x_1 > ... > x_n (lex-descending within the degree).
/// Length C(d+n, n).
std::vector<std::vector<unsigned>> monomial_basis(unsigned n, unsigned d);

/// Vanishing-to-order-m conditions at one point, one row per multi-index
/// beta over the n affine variables with |beta| <= m-1 (C(m-1+n, n) rows,
/// beta in graded-lex).  The entry for column (a_0, a_1, ..., a_n) is
/// prod_{i=1..n} C(a_i, beta_i) * point_i^(a_i - beta_i) mod p — the Hasse
/// derivative evaluation, correct in every characteristic.
std::vector<std::vector<std::uint64_t>> condition_rows(
    const ProjectivePoint& point, unsigned m, unsigned d,
    const std::vector<std::vector<unsigned>>& basis, std::uint64_t p);

/// Dense row-major matrix over GF(prime).
struct ConditionMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> data;  ///< rows * cols entries, row-major

  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

/// Stacks condition_rows over all points (block order = point order).
/// rows = s * C(m-1+n, n), cols = C(d+n, n).
ConditionMatrix build_matrix(const PointSet& points, unsigned m, unsigned d);

/// Rank over GF(p) by row reduction with modular pivot inverses.
std::size_t rank_gf(ConditionMatrix matrix);

/// True iff the conditions leave a nonzero polynomial: rank < C(d+n, n).
bool has_kernel(const PointSet& points, unsigned m, unsigned d);

/// Same decision for a matrix already assembled.
bool has_kernel(ConditionMatrix matrix);

/// Raised when a degree scan reaches its cap without finding a kernel.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least degree with a kernel plus the rank at every degree tried.
struct AlphaResult {
  unsigned alpha = 0;
  std::vector<std::pair<unsigned, std::size_t>> ranks;  ///< (d, rank), d ascending
};

/// Scans d = 1, 2, ... and returns the first degree whose condition matrix
/// has a nonzero kernel.  Throws CapExceeded past `cap` (cap >= 1).
AlphaResult alpha_of(const PointSet& points, unsigned m, unsigned cap);

/// Cap that cannot cut off the scan: max(k(m+n-1)-n+1 + n, delta), since
/// alpha <= delta holds for every point set by the dimension count.
unsigned default_degree_cap(unsigned n, const BigInt& s, unsigned m);

/// One row of the Waldschmidt-quotient table.
struct SequenceRow {
  unsigned m = 0;
  unsigned alpha = 0;
  Rational ratio;  ///< alpha / m, exact
};

/// alpha_of for m = 1..max_mult; cap 0 selects the per-m default cap.
std::vector<SequenceRow> waldschmidt_sequence(const PointSet& points,
                                              unsigned max_mult,
                                              unsigned cap = 0);

/// Text format: header "n s p", then one point per line as its n affine
/// coordinates, decimal, space-separated.
PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& points);

}  // namespace fatpoints::interpolation
