#include "fatpoints/algebraic.hpp"

#include <stdexcept>
#include <utility>

namespace fatpoints::algebraic {

using exactnum::floor_mul_nth_root;
using exactnum::int_nth_root;
using exactnum::pow_big;

namespace {

// Largest divisor g of n with s = u^g; returns {u, g}. g = 1 when s is not
// a perfect power of any exponent dividing n.
std::pair<BigInt, unsigned> largest_power_divisor(const BigInt& s, unsigned n) {
  for (unsigned g = n; g >= 2; --g) {
    if (n % g != 0) continue;
    BigInt u = int_nth_root(s, g);
    if (pow_big(u, g) == s) return {u, g};
  }
  return {s, 1};
}

}  // namespace

AlgebraicExpr::AlgebraicExpr(Canonical, BigInt radicand, unsigned degree,
                             std::vector<Rational> coeffs)
    : radicand_(std::move(radicand)), degree_(degree), coeffs_(std::move(coeffs)) {}

AlgebraicExpr::AlgebraicExpr(BigInt radicand, unsigned degree, std::vector<Rational> coeffs)
    : radicand_(std::move(radicand)), degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ == 0) throw std::invalid_argument("AlgebraicExpr: degree must be positive");
  if (sgn(radicand_) <= 0) throw std::invalid_argument("AlgebraicExpr: radicand must be >= 1");
  if (coeffs_.size() != degree_)
    throw std::invalid_argument("AlgebraicExpr: need exactly one coefficient per basis power");

  if (degree_ > 1) {
    auto [u, g] = largest_power_divisor(radicand_, degree_);
    if (g > 1) {
      // s = u^g, so s^(1/n) = u^(1/(n/g)); fold the basis accordingly.
      unsigned reduced = degree_ / g;
      std::vector<Rational> folded(reduced, Rational(0));
      BigInt upow(1);
      unsigned q = 0;
      for (unsigned j = 0; j < degree_; ++j) {
        if (j / reduced != q) {
          q = j / reduced;
          upow *= u;
        }
        folded[j % reduced] += coeffs_[j] * Rational(upow);
      }
      radicand_ = u;
      degree_ = reduced;
      coeffs_ = std::move(folded);
    }
  }

  // A rational value keeps no radical around.
  bool higher_zero = true;
  for (unsigned j = 1; j < degree_; ++j)
    if (sgn(coeffs_[j]) != 0) { higher_zero = false; break; }
  if (higher_zero && degree_ > 1) {
    coeffs_.resize(1);
    degree_ = 1;
  }
  if (degree_ == 1) radicand_ = 1;
}

AlgebraicExpr AlgebraicExpr::constant(const Rational& value) {
  return AlgebraicExpr(Canonical{}, BigInt(1), 1, {value});
}

AlgebraicExpr AlgebraicExpr::root(const BigInt& radicand, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("AlgebraicExpr: degree must be positive");
  std::vector<Rational> c(degree, Rational(0));
  if (degree == 1) {
    c[0] = Rational(radicand);
  } else {
    c[1] = 1;
  }
  return AlgebraicExpr(BigInt(radicand), degree, std::move(c));
}

const Rational& AlgebraicExpr::rational_value() const {
  if (!is_rational()) throw std::logic_error("AlgebraicExpr: value is irrational");
  return coeffs_[0];
}

void AlgebraicExpr::align(AlgebraicExpr& a, AlgebraicExpr& b) {
  if (a.degree_ == b.degree_ && a.radicand_ == b.radicand_) return;
  if (a.is_rational()) {
    std::vector<Rational> c(b.degree_, Rational(0));
    c[0] = a.coeffs_[0];
    a = AlgebraicExpr(Canonical{}, b.radicand_, b.degree_, std::move(c));
    return;
  }
  if (b.is_rational()) {
    align(b, a);
    return;
  }
  throw std::invalid_argument("AlgebraicExpr: operands live in different radical fields");
}

AlgebraicExpr AlgebraicExpr::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (Rational& x : c) x = -x;
  return AlgebraicExpr(Canonical{}, radicand_, degree_, std::move(c));
}

AlgebraicExpr operator+(const AlgebraicExpr& a, const AlgebraicExpr& b) {
  AlgebraicExpr x = a, y = b;
  AlgebraicExpr::align(x, y);
  std::vector<Rational> c(x.degree_);
  for (unsigned j = 0; j < x.degree_; ++j) c[j] = x.coeffs_[j] + y.coeffs_[j];
  return AlgebraicExpr(x.radicand_, x.degree_, std::move(c));
}

AlgebraicExpr operator-(const AlgebraicExpr& a, const AlgebraicExpr& b) {
  return a + (-b);
}

AlgebraicExpr operator*(const AlgebraicExpr& a, const AlgebraicExpr& b) {
  AlgebraicExpr x = a, y = b;
  AlgebraicExpr::align(x, y);
  unsigned n = x.degree_;
  std::vector<Rational> conv(2 * n - 1, Rational(0));
  for (unsigned i = 0; i < n; ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (unsigned j = 0; j < n; ++j) conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  // r^n = radicand
  std::vector<Rational> c(conv.begin(), conv.begin() + n);
  for (unsigned j = n; j < 2 * n - 1; ++j) c[j - n] += conv[j] * Rational(x.radicand_);
  return AlgebraicExpr(x.radicand_, n, std::move(c));
}

AlgebraicExpr operator+(const AlgebraicExpr& a, const Rational& b) {
  return a + AlgebraicExpr::constant(b);
}
AlgebraicExpr operator+(const Rational& a, const AlgebraicExpr& b) {
  return AlgebraicExpr::constant(a) + b;
}
AlgebraicExpr operator-(const AlgebraicExpr& a, const Rational& b) {
  return a - AlgebraicExpr::constant(b);
}
AlgebraicExpr operator-(const Rational& a, const AlgebraicExpr& b) {
  return AlgebraicExpr::constant(a) - b;
}
AlgebraicExpr operator*(const Rational& a, const AlgebraicExpr& b) {
  return AlgebraicExpr::constant(a) * b;
}
AlgebraicExpr operator*(const AlgebraicExpr& a, const Rational& b) {
  return a * AlgebraicExpr::constant(b);
}

Sign sign_of(const Rational& q) {
  int s = sgn(q);
  if (s < 0) return Sign::Negative;
  if (s > 0) return Sign::Positive;
  return Sign::Zero;
}

Sign ae_sign(const AlgebraicExpr& x, unsigned max_precision_bits) {
  if (max_precision_bits == 0)
    throw std::invalid_argument("ae_sign: precision cap must be positive");
  if (x.is_rational()) return sign_of(x.rational_value());

  // Canonical form guarantees the value is irrational here, so the
  // bracketing interval eventually excludes zero; the cap is a guard.
  const BigInt& u = x.radicand();
  const unsigned n = x.degree();

  unsigned prec = 128 < max_precision_bits ? 128 : max_precision_bits;
  for (;;) {
    BigInt scale(1);
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), prec);
    // r <= 2^prec * u^(1/n) < r + 1
    BigInt r = floor_mul_nth_root(scale, u, n);
    BigInt r1 = r + 1;

    Rational lo = x.coeffs()[0];
    Rational hi = lo;
    BigInt rpow(1), r1pow(1), denom(1);
    for (unsigned j = 1; j < n; ++j) {
      rpow *= r;
      r1pow *= r1;
      mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), prec);
      const Rational& cj = x.coeffs()[j];
      if (sgn(cj) == 0) continue;
      Rational plo(rpow, denom);
      plo.canonicalize();
      Rational phi(r1pow, denom);
      phi.canonicalize();
      if (sgn(cj) > 0) {
        lo += cj * plo;
        hi += cj * phi;
      } else {
        lo += cj * phi;
        hi += cj * plo;
      }
    }
    if (sgn(lo) > 0) return Sign::Positive;
    if (sgn(hi) < 0) return Sign::Negative;
    if (prec >= max_precision_bits) return Sign::Indeterminate;
    prec = prec * 2 < max_precision_bits ? prec * 2 : max_precision_bits;
  }
}

}  // namespace fatpoints::algebraic
