#pragma once

#include <optional>
#include <vector>

#include <fatpoints/algebraic.hpp>
#include <fatpoints/exactnum.hpp>

namespace fatpoints::bounds {

using algebraic::AlgebraicExpr;
using algebraic::Sign;
using exactnum::BigInt;
using exactnum::Rational;

/// One problem instance: s points in projective n-space, multiplicity m.
struct Instance {
  unsigned n = 1;  ///< ambient projective dimension, >= 1
  BigInt s = 1;    ///< number of points, >= 1
  BigInt m = 1;    ///< multiplicity, >= 1
};

/// Throws std::invalid_argument unless n >= 1, s >= 1, m >= 1.
void validate(const Instance& inst);

/// k = floor(s^(1/n)) together with whether the fractional part vanishes.
struct RootData {
  BigInt s;
  unsigned n = 1;
  BigInt k;                      ///< k^n <= s < (k+1)^n
  bool epsilon_is_zero = false;  ///< true iff k^n == s
};

/// Computes RootData for s >= 1, n >= 1.
RootData root_data(const BigInt& s, unsigned n);

/// delta = floor(s^(1/n) * (m+n-1)) - n + 1; an upper bound for the least
/// degree of a form vanishing to order m at ANY s points of P^n.
BigInt delta_bound(const Instance& inst);

/// The degree-bound assumption (n-1)(k-2) >= 2(m-1)*eps, decided exactly by
/// integer powering.  Requires n >= 2 (the inequality divides by n-1).
bool demailly_condition(const Instance& inst);

/// Largest multiplicity covered by the assumption for fixed (n, s).
struct MaxMult {
  enum class Kind { None, Unbounded, Bounded };
  Kind kind = Kind::None;
  BigInt value;  ///< meaningful only when kind == Bounded
};

/// None when k < 2; Unbounded when eps = 0 and k >= 2; otherwise the largest
/// m for which demailly_condition holds (the predicate is antitone in m).
/// Requires n >= 2.
MaxMult max_m(unsigned n, const BigInt& s);

/// k(m+n-1) - n + 1, the conclusion's degree bound under the assumption.
BigInt k_bound(const Instance& inst);

/// Exact big-integer test of C(k(m+n-1)+1, n) > C(m+n-1, n) * s.
bool sufficient_condition(const Instance& inst);

/// Exact test of factor inequality number i:
///   (k(m+n-1)+1-i)(k(m+n-1)+1-(n-1)+i) > s^(2/n) * (m+n-1-i)(m+i)
/// for 0 <= i <= floor((n-1)/2).
bool factor_inequality(const Instance& inst, unsigned i);

/// Symbolic proof certificate: the quadratic-in-m coefficients A, B, C_i and
/// the boundary-substitution functions, all as exact algebraic numbers in
/// Q[s^(1/n)], with adaptive-precision sign verdicts attached.
struct Certificate {
  AlgebraicExpr A;      ///< k^2 - (k+eps)^2
  AlgebraicExpr B;      ///< (n-1)(k^2 - (1+2 eps)k - eps^2) + 2k
  std::vector<AlgebraicExpr> C_list;  ///< C_i for i = 0..floor((n-1)/2)
  AlgebraicExpr C_min;  ///< ((2k-1)(n-1)/2 + 1)^2 - ((k+eps)(n-1)/2)^2
  std::optional<AlgebraicExpr> f;           ///< present iff eps > 0
  std::optional<AlgebraicExpr> g;           ///< present iff eps > 0
  std::optional<AlgebraicExpr> boundary_m;  ///< (n-1)(k-2)/(2 eps) + 1
  Sign sign_A = Sign::Indeterminate;
  Sign sign_C_min = Sign::Indeterminate;
  std::optional<Sign> sign_f;
  std::optional<Sign> sign_g;
};

/// Builds the certificate for n >= 2.
Certificate certificate(const Instance& inst);

/// Which of the two sufficient conditions hold: the degree-bound assumption
/// ("New") versus k >= m+1 ("MSS").
enum class MssComparison { OnlyNew, OnlyMSS, Both, Neither };

/// Classifies the instance; requires n >= 2.
MssComparison compare_mss(const Instance& inst);

/// Outcome of one factor inequality.
struct FactorResult {
  unsigned i = 0;
  bool holds = false;
};

/// Aggregate of every bound and check for one instance.  The part-(b)
/// fields are absent (and factor_results empty) when n = 1.
struct BoundReport {
  BigInt delta;
  BigInt k_bound;
  std::optional<bool> condition_holds;
  std::optional<bool> sufficient_holds;
  std::vector<FactorResult> factor_results;
  std::optional<MssComparison> mss_comparison;
};

/// Populates a BoundReport from the operations above.
BoundReport bound_report(const Instance& inst);

}  // namespace fatpoints::bounds
