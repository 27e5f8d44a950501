#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include <fatpoints/algebraic.hpp>
#include <fatpoints/exactnum.hpp>
#include <fatpoints/splitmix64.hpp>

using fatpoints::SplitMix64;
using fatpoints::algebraic::ae_sign;
using fatpoints::algebraic::AlgebraicExpr;
using fatpoints::algebraic::Sign;
using fatpoints::algebraic::sign_of;
using fatpoints::exactnum::BigInt;
using fatpoints::exactnum::cmp_radical;
using fatpoints::exactnum::RadicalOrdering;
using fatpoints::exactnum::Rational;

namespace {

AlgebraicExpr theta_power(const AlgebraicExpr& theta, unsigned j) {
  AlgebraicExpr out = AlgebraicExpr::constant(Rational(1));
  for (unsigned i = 0; i < j; ++i) {
    out = out * theta;
  }
  return out;
}

}  // namespace

TEST_CASE("construction canonicalizes perfect powers") {
  CHECK(AlgebraicExpr::root(BigInt(4), 2).is_rational());
  CHECK(AlgebraicExpr::root(BigInt(4), 2).rational_value() == 2);
  CHECK(AlgebraicExpr::root(BigInt(8), 3).rational_value() == 2);
  CHECK(AlgebraicExpr::root(BigInt(27), 3).rational_value() == 3);
  CHECK(AlgebraicExpr::root(BigInt(16), 4).rational_value() == 2);
  CHECK(AlgebraicExpr::root(BigInt(64), 6).rational_value() == 2);

  // 4^(1/4) = 2^(1/2): partial reduction.
  const AlgebraicExpr r = AlgebraicExpr::root(BigInt(4), 4);
  CHECK(r.degree() == 2);
  CHECK(r.radicand() == 2);
  CHECK_FALSE(r.is_rational());

  const AlgebraicExpr five = AlgebraicExpr::root(BigInt(5), 2);
  CHECK(five.degree() == 2);
  CHECK(five.radicand() == 5);
  CHECK(five.coeffs()[0] == 0);
  CHECK(five.coeffs()[1] == 1);
}

TEST_CASE("a value whose radical part cancels collapses to a rational") {
  const AlgebraicExpr theta = AlgebraicExpr::root(BigInt(5), 2);
  const AlgebraicExpr eps = theta - Rational(2);
  // (theta - 2)(theta + 2) = 1.
  const AlgebraicExpr prod = eps * (theta + Rational(2));
  CHECK(prod.is_rational());
  CHECK(prod.rational_value() == 1);
  // Difference of equal values is exactly zero.
  const AlgebraicExpr zero = theta - theta;
  CHECK(zero.is_rational());
  CHECK(zero.rational_value() == 0);
  CHECK(ae_sign(zero) == Sign::Zero);
}

TEST_CASE("epsilon squared over sqrt(5)") {
  const AlgebraicExpr theta = AlgebraicExpr::root(BigInt(5), 2);
  const AlgebraicExpr eps = theta - Rational(2);
  const AlgebraicExpr sq = eps * eps;  // 9 - 4 theta
  CHECK(sq.degree() == 2);
  CHECK(sq.coeffs()[0] == 9);
  CHECK(sq.coeffs()[1] == -4);
}

TEST_CASE("inverse of epsilon via rationalization") {
  // 1/(sqrt(5)-2) = sqrt(5)+2.
  const AlgebraicExpr theta = AlgebraicExpr::root(BigInt(5), 2);
  const AlgebraicExpr eps = theta - Rational(2);
  const AlgebraicExpr inv = theta + Rational(2);
  const AlgebraicExpr prod = eps * inv;
  CHECK(prod.is_rational());
  CHECK(prod.rational_value() == 1);
}

TEST_CASE("ring identities on random expressions") {
  SplitMix64 rng{11};
  const AlgebraicExpr theta = AlgebraicExpr::root(BigInt(7), 3);
  const auto random_expr = [&]() {
    std::vector<Rational> c;
    for (int j = 0; j < 3; ++j) {
      c.emplace_back(static_cast<long>(rng.next() % 41) - 20);
    }
    return AlgebraicExpr(BigInt(7), 3, std::move(c));
  };
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraicExpr a = random_expr();
    const AlgebraicExpr b = random_expr();
    const AlgebraicExpr c = random_expr();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == AlgebraicExpr::constant(Rational(0)));
    CHECK(-(-a) == a);
  }
}

TEST_CASE("mixed rational arithmetic") {
  const AlgebraicExpr theta = AlgebraicExpr::root(BigInt(2), 2);
  CHECK(Rational(3) + theta == theta + Rational(3));
  CHECK(Rational(3) * theta == theta * Rational(3));
  CHECK((theta + Rational(1)) - Rational(1) == theta);
  const AlgebraicExpr x = Rational(2) - theta;
  CHECK(x.coeffs()[0] == 2);
  CHECK(x.coeffs()[1] == -1);
}

TEST_CASE("operands over genuinely different radical fields are rejected") {
  const AlgebraicExpr a = AlgebraicExpr::root(BigInt(2), 2);
  const AlgebraicExpr b = AlgebraicExpr::root(BigInt(3), 2);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  // Rational operands lift into any field.
  const AlgebraicExpr c = AlgebraicExpr::root(BigInt(9), 2);  // rational 3
  CHECK((a + c).degree() == 2);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(AlgebraicExpr(BigInt(2), 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraicExpr(BigInt(0), 2, {Rational(0), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AlgebraicExpr(BigInt(2), 2, {Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AlgebraicExpr::root(BigInt(5), 0), std::invalid_argument);
}

TEST_CASE("rational_value on an irrational value throws") {
  CHECK_THROWS_AS(AlgebraicExpr::root(BigInt(5), 2).rational_value(),
                  std::logic_error);
}

TEST_CASE("ae_sign basics") {
  CHECK(sign_of(Rational(-3, 7)) == Sign::Negative);
  CHECK(sign_of(Rational(0)) == Sign::Zero);
  CHECK(sign_of(Rational(5)) == Sign::Positive);

  const AlgebraicExpr theta = AlgebraicExpr::root(BigInt(5), 2);
  CHECK(ae_sign(theta - Rational(2)) == Sign::Positive);
  CHECK(ae_sign(theta - Rational(3)) == Sign::Negative);
  CHECK(ae_sign(AlgebraicExpr::constant(Rational(0))) == Sign::Zero);
}

TEST_CASE("ae_sign resolves razor-thin margins") {
  // 665857 - 470832 sqrt(2) ~ 1.06e-6 > 0 (continued-fraction convergent).
  const AlgebraicExpr root2 = AlgebraicExpr::root(BigInt(2), 2);
  const AlgebraicExpr tight =
      Rational(665857) - Rational(470832) * root2;
  CHECK(ae_sign(tight) == Sign::Positive);
  CHECK(ae_sign(-tight) == Sign::Negative);

  // Pell solutions p^2 - 2q^2 = 1 give p - q sqrt(2) = 1/(p + q sqrt(2)),
  // positive but shrinking fast; each must still resolve exactly.
  BigInt p(3), q(2);
  for (int step = 0; step < 14; ++step) {
    const BigInt np = 3 * p + 4 * q;
    const BigInt nq = 2 * p + 3 * q;
    p = np;
    q = nq;
    REQUIRE(p * p - 2 * q * q == 1);
    const AlgebraicExpr margin = Rational(p) - Rational(q) * root2;
    CHECK(ae_sign(margin) == Sign::Positive);
    CHECK(ae_sign(-margin) == Sign::Negative);
  }
}

TEST_CASE("ae_sign agrees with cmp_radical on random tuples") {
  SplitMix64 rng{123};
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng.next() % 4);
    const unsigned j = 1 + static_cast<unsigned>(rng.next() % (n - 1));
    const BigInt a(rng.next() % 100000);
    const BigInt b(rng.next() % 1000);
    const BigInt s(rng.next() % 5000 + 2);
    const AlgebraicExpr theta = AlgebraicExpr::root(s, n);
    const AlgebraicExpr expr =
        Rational(a) - Rational(b) * theta_power(theta, j);
    const Sign got = ae_sign(expr);
    CHECK(got != Sign::Indeterminate);
    const RadicalOrdering want = cmp_radical(a, b, s, j, n);
    if (want == RadicalOrdering::Greater) CHECK(got == Sign::Positive);
    if (want == RadicalOrdering::Equal) CHECK(got == Sign::Zero);
    if (want == RadicalOrdering::Less) CHECK(got == Sign::Negative);
  }
}
