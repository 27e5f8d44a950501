#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <fatpoints/bounds.hpp>
#include <fatpoints/interpolation.hpp>

namespace fatpoints::verify {

using bounds::Instance;
using exactnum::BigInt;
using exactnum::Rational;

/// Thrown when an unconditional theorem fails on computed data — that can
/// only mean a bug, never a mathematical finding.
class SoftwareFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One instance's empirical alpha next to every proven bound.
struct ExperimentReport {
  Instance instance;
  std::uint64_t seed = 0;
  std::uint64_t prime = interpolation::kDefaultPrime;
  unsigned alpha = 0;
  BigInt delta;
  std::optional<BigInt> k_bound;        ///< n >= 2 only
  std::optional<bool> condition_holds;  ///< n >= 2 only
  Rational demailly_ratio;              ///< (alpha + n - 1) / (m + n - 1)
  bool thm_a_ok = false;                ///< alpha <= delta (always true)
  std::optional<bool> thm_b_ok;         ///< absent when condition false or n = 1
  bool ratio_le_k = false;              ///< alpha + n - 1 <= k (m + n - 1)
};

/// Samples points, computes alpha, and fills every verdict.  A violation of
/// the unconditional bound alpha <= delta throws SoftwareFault.  cap = 0
/// selects the safe default degree cap.
ExperimentReport run_instance(unsigned n, const BigInt& s, unsigned m,
                              const interpolation::PrimeModulus& prime,
                              std::uint64_t seed, unsigned cap = 0);

/// Same report for an explicit point set; the seed field is left at 0.
ExperimentReport run_instance(const interpolation::PointSet& points, unsigned m,
                              unsigned cap = 0);

/// Outcome of the sequence-level invariant checks for one point set.
struct InvariantReport {
  bool pass = true;
  std::string first_failure;     ///< empty when pass
  std::vector<unsigned> alphas;  ///< alpha for m = 1..max_mult
};

/// Checks monotonicity in m, subadditivity, alpha(m) <= m*alpha(1), and
/// alpha(m) <= delta for the given points over m = 1..max_mult (>= 2).
InvariantReport invariant_suite(const interpolation::PointSet& points,
                                unsigned max_mult, unsigned cap = 0);

/// One cell of the exhaustive arithmetic sweep.
struct SweepRow {
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::uint64_t m = 0;
  bool condition_holds = false;
  bool sufficient_holds = false;
  bool factor_ok = false;  ///< all factor inequalities hold
  bounds::MssComparison mss_class = bounds::MssComparison::Neither;
  bool violation = false;  ///< condition_holds && !(sufficient_holds && factor_ok)
};

struct SweepSummary {
  std::uint64_t rows = 0;
  std::uint64_t violations = 0;
};

/// Evaluates every (n, s, m) in [n_min, n_max] x [1, s_max] x [1, m_max] by
/// pure integer arithmetic and feeds rows to `sink` sorted by (n, s, m).
/// `threads` > 1 parallelizes over (n, s) blocks; emission order and content
/// are identical to the sequential run.  Requires n_min >= 2.
SweepSummary theorem_sweep(unsigned n_min, unsigned n_max, std::uint64_t s_max,
                           std::uint64_t m_max, unsigned threads,
                           const std::function<void(const SweepRow&)>& sink);

/// The m = 1 specialization: initial degree of the ideal itself.
struct ChudnovskyReport {
  unsigned alpha = 0;  ///< alpha at m = 1
  Rational ratio;      ///< (alpha + n - 1) / n
  BigInt k;            ///< floor(s^(1/n))
  bool ratio_le_k = false;  ///< alpha + n - 1 <= k * n
};

/// Computes the m = 1 report for an explicit point set; cap = 0 for default.
ChudnovskyReport chudnovsky_report(const interpolation::PointSet& points,
                                   unsigned cap = 0);

}  // namespace fatpoints::verify
