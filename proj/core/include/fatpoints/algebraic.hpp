#pragma once

#include <vector>

#include "fatpoints/exactnum.hpp"

namespace fatpoints::algebraic {

using exactnum::BigInt;
using exactnum::Rational;

enum class Sign { Negative, Zero, Positive, Indeterminate };

// Element of Q[x]/(x^n - s) written on the power basis of r = s^(1/n):
// value = sum_j coeffs[j] * r^j with 0 <= j < n.
//
// Construction canonicalizes the field description. If s = u^g for the
// largest divisor g of n, the element is rewritten over u^(1/(n/g)); when
// that collapses to degree 1 the value is rational and is stored with
// radicand 1 and degree 1. After canonicalization x^degree - radicand is
// irreducible over Q, so the stored powers of the root are linearly
// independent and an element is zero exactly when every coefficient is.
class AlgebraicExpr {
 public:
  AlgebraicExpr(BigInt radicand, unsigned degree, std::vector<Rational> coeffs);

  static AlgebraicExpr constant(const Rational& value);
  /// The root s^(1/n) itself.
  static AlgebraicExpr root(const BigInt& radicand, unsigned degree);

  const BigInt& radicand() const { return radicand_; }
  unsigned degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_rational() const { return degree_ == 1; }
  /// Value of a degree-1 element; throws otherwise.
  const Rational& rational_value() const;

  AlgebraicExpr operator-() const;
  friend AlgebraicExpr operator+(const AlgebraicExpr& a, const AlgebraicExpr& b);
  friend AlgebraicExpr operator-(const AlgebraicExpr& a, const AlgebraicExpr& b);
  friend AlgebraicExpr operator*(const AlgebraicExpr& a, const AlgebraicExpr& b);

  bool operator==(const AlgebraicExpr& other) const {
    return degree_ == other.degree_ && radicand_ == other.radicand_ &&
           coeffs_ == other.coeffs_;
  }

 private:
  struct Canonical {};
  AlgebraicExpr(Canonical, BigInt radicand, unsigned degree, std::vector<Rational> coeffs);

  // Lifts one operand into the other's field when one side is rational.
  static void align(AlgebraicExpr& a, AlgebraicExpr& b);

  BigInt radicand_;
  unsigned degree_;
  std::vector<Rational> coeffs_;
};

// Mixed arithmetic with plain rationals.
AlgebraicExpr operator+(const AlgebraicExpr& a, const Rational& b);
AlgebraicExpr operator+(const Rational& a, const AlgebraicExpr& b);
AlgebraicExpr operator-(const AlgebraicExpr& a, const Rational& b);
AlgebraicExpr operator-(const Rational& a, const AlgebraicExpr& b);
AlgebraicExpr operator*(const Rational& a, const AlgebraicExpr& b);
AlgebraicExpr operator*(const AlgebraicExpr& a, const Rational& b);

// Sign of the real number the expression denotes. Rational elements are
// decided directly. Irrational ones are bracketed by an exact dyadic
// interval around the root, starting at 128 bits and doubling until the
// interval excludes zero or max_precision_bits is reached; the precision
// cap exists only to force termination and exhausting it yields
// Indeterminate.
Sign ae_sign(const AlgebraicExpr& x, unsigned max_precision_bits = 4096);

Sign sign_of(const Rational& q);

}  // namespace fatpoints::algebraic
