#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include <fatpoints/bounds.hpp>

using namespace fatpoints::bounds;
using fatpoints::algebraic::AlgebraicExpr;
using fatpoints::algebraic::ae_sign;
using fatpoints::algebraic::Sign;
using fatpoints::exactnum::BigInt;
using fatpoints::exactnum::Rational;

namespace {

Instance inst(unsigned n, long s, long m) {
  return Instance{n, BigInt(s), BigInt(m)};
}

}  // namespace

TEST_CASE("validate rejects out-of-range fields") {
  CHECK_THROWS_AS(validate(inst(0, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(inst(1, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(inst(1, 1, 0)), std::invalid_argument);
  CHECK_NOTHROW(validate(inst(1, 1, 1)));
}

TEST_CASE("root_data") {
  const RootData a = root_data(BigInt(9), 2);
  CHECK(a.k == 3);
  CHECK(a.epsilon_is_zero);
  const RootData b = root_data(BigInt(10), 2);
  CHECK(b.k == 3);
  CHECK_FALSE(b.epsilon_is_zero);
  const RootData c = root_data(BigInt(1), 5);
  CHECK(c.k == 1);
  CHECK(c.epsilon_is_zero);
  const RootData d = root_data(BigInt(30), 3);
  CHECK(d.k == 3);
  CHECK_FALSE(d.epsilon_is_zero);
}

TEST_CASE("delta_bound pins") {
  CHECK(delta_bound(inst(2, 4, 2)) == 5);
  CHECK(delta_bound(inst(2, 5, 2)) == 5);
  CHECK(delta_bound(inst(2, 9, 3)) == 11);
  // n = 1: delta = s * m exactly (floor(s (m+0)) - 0).
  CHECK(delta_bound(inst(1, 3, 2)) == 6);
  CHECK(delta_bound(inst(1, 7, 5)) == 35);
}

TEST_CASE("demailly_condition decisions") {
  // eps = 0, k >= 2: holds for every m.
  CHECK(demailly_condition(inst(2, 9, 1)));
  CHECK(demailly_condition(inst(2, 9, 1000000)));
  // k = 2 irrational root: only m = 1.
  CHECK(demailly_condition(inst(2, 5, 1)));
  CHECK_FALSE(demailly_condition(inst(2, 5, 2)));
  // k < 2: never.
  CHECK_FALSE(demailly_condition(inst(2, 3, 1)));
  // Boundary pair at (3, 30): max m is 10.
  CHECK(demailly_condition(inst(3, 30, 10)));
  CHECK_FALSE(demailly_condition(inst(3, 30, 11)));
  // n = 1 is outside the contract.
  CHECK_THROWS_AS(demailly_condition(inst(1, 5, 1)), std::invalid_argument);
}

TEST_CASE("max_m classification") {
  const MaxMult none = max_m(2, BigInt(3));
  CHECK(none.kind == MaxMult::Kind::None);

  const MaxMult unbounded = max_m(2, BigInt(9));
  CHECK(unbounded.kind == MaxMult::Kind::Unbounded);
  CHECK(max_m(2, BigInt(4)).kind == MaxMult::Kind::Unbounded);

  const MaxMult b30 = max_m(3, BigInt(30));
  CHECK(b30.kind == MaxMult::Kind::Bounded);
  CHECK(b30.value == 10);

  const MaxMult b5 = max_m(2, BigInt(5));
  CHECK(b5.kind == MaxMult::Kind::Bounded);
  CHECK(b5.value == 1);

  CHECK_THROWS_AS(max_m(1, BigInt(5)), std::invalid_argument);
}

TEST_CASE("max_m agrees with the condition on both sides of the boundary") {
  for (long s = 4; s <= 120; ++s) {
    for (unsigned n = 2; n <= 4; ++n) {
      const MaxMult mm = max_m(n, BigInt(s));
      if (mm.kind == MaxMult::Kind::None) {
        CHECK_FALSE(demailly_condition(Instance{n, BigInt(s), BigInt(1)}));
      } else if (mm.kind == MaxMult::Kind::Unbounded) {
        CHECK(demailly_condition(Instance{n, BigInt(s), BigInt(1000000)}));
      } else {
        CHECK(demailly_condition(Instance{n, BigInt(s), mm.value}));
        CHECK_FALSE(
            demailly_condition(Instance{n, BigInt(s), mm.value + 1}));
      }
    }
  }
}

TEST_CASE("k_bound pins") {
  CHECK(k_bound(inst(2, 4, 2)) == 5);
  CHECK(k_bound(inst(3, 30, 10)) == 3 * 12 - 2);
}

TEST_CASE("sufficient_condition and factor_inequality pins") {
  CHECK(sufficient_condition(inst(2, 4, 2)));  // C(7,2)=21 > C(3,2)*4=12
  CHECK(factor_inequality(inst(2, 4, 2), 0));  // 7*6=42 > 6*4=24
  CHECK_THROWS_AS(factor_inequality(inst(2, 4, 2), 1), std::invalid_argument);
  // n = 3 allows i in {0, 1}.
  CHECK_NOTHROW(factor_inequality(inst(3, 30, 2), 1));
  CHECK_THROWS_AS(factor_inequality(inst(3, 30, 2), 2), std::invalid_argument);
}

TEST_CASE("certificate over sqrt(5)") {
  const Certificate c = certificate(inst(2, 5, 1));
  CHECK(c.A == AlgebraicExpr::constant(Rational(-1)));
  CHECK(c.sign_A == Sign::Negative);
  CHECK(c.B == AlgebraicExpr::constant(Rational(5)));
  REQUIRE(c.C_list.size() == 1);
  CHECK(c.C_list[0] == AlgebraicExpr::constant(Rational(6)));
  CHECK(c.C_min == AlgebraicExpr::constant(Rational(5)));
  CHECK(c.sign_C_min == Sign::Positive);
  REQUIRE(c.f.has_value());
  REQUIRE(c.g.has_value());
  REQUIRE(c.boundary_m.has_value());
  CHECK(*c.f == AlgebraicExpr::constant(Rational(1)));
  CHECK(*c.g == AlgebraicExpr::constant(Rational(4)));
  CHECK(*c.boundary_m == AlgebraicExpr::constant(Rational(1)));
  CHECK(*c.sign_f == Sign::Positive);
  CHECK(*c.sign_g == Sign::Positive);
}

TEST_CASE("certificate over a perfect square has no boundary data") {
  const Certificate c = certificate(inst(2, 9, 2));
  CHECK(c.A == AlgebraicExpr::constant(Rational(0)));
  CHECK(c.sign_A == Sign::Zero);
  CHECK(c.B == AlgebraicExpr::constant(Rational(12)));
  REQUIRE(c.C_list.size() == 1);
  CHECK(c.C_list[0] == AlgebraicExpr::constant(Rational(12)));
  CHECK(c.C_min == AlgebraicExpr::constant(Rational(10)));
  CHECK(c.sign_C_min == Sign::Positive);
  CHECK_FALSE(c.f.has_value());
  CHECK_FALSE(c.g.has_value());
  CHECK_FALSE(c.boundary_m.has_value());
  CHECK_FALSE(c.sign_f.has_value());
  CHECK_FALSE(c.sign_g.has_value());
}

TEST_CASE("certificate over cbrt(30)") {
  const Certificate c = certificate(inst(3, 30, 1));
  // A = 9 - theta^2.
  CHECK(c.A.degree() == 3);
  CHECK(c.A.radicand() == 30);
  CHECK(c.A.coeffs()[0] == 9);
  CHECK(c.A.coeffs()[1] == 0);
  CHECK(c.A.coeffs()[2] == -1);
  CHECK(c.sign_A == Sign::Negative);
  // B = 36 - 2 theta^2.
  CHECK(c.B.coeffs()[0] == 36);
  CHECK(c.B.coeffs()[2] == -2);
  // C_0 = 35 rational; C_1 = C_min = 36 - theta^2.
  REQUIRE(c.C_list.size() == 2);
  CHECK(c.C_list[0] == AlgebraicExpr::constant(Rational(35)));
  CHECK(c.C_list[1] == c.C_min);
  CHECK(c.C_min.coeffs()[0] == 36);
  CHECK(c.C_min.coeffs()[2] == -1);
  CHECK(c.sign_C_min == Sign::Positive);
  // f = 9 + theta + theta^2/4, g = 26 + 2 theta.
  REQUIRE(c.f.has_value());
  CHECK(c.f->coeffs()[0] == 9);
  CHECK(c.f->coeffs()[1] == 1);
  CHECK(c.f->coeffs()[2] == Rational(1, 4));
  REQUIRE(c.g.has_value());
  CHECK(c.g->coeffs()[0] == 26);
  CHECK(c.g->coeffs()[1] == 2);
  CHECK(c.g->coeffs()[2] == 0);
  CHECK(*c.sign_f == Sign::Positive);
  CHECK(*c.sign_g == Sign::Positive);
  // boundary_m = 4 + theta + theta^2/3 ~ 10.32, consistent with max_m = 10.
  REQUIRE(c.boundary_m.has_value());
  CHECK(c.boundary_m->coeffs()[0] == 4);
  CHECK(c.boundary_m->coeffs()[1] == 1);
  CHECK(c.boundary_m->coeffs()[2] == Rational(1, 3));
  CHECK(ae_sign(*c.boundary_m - Rational(10)) == Sign::Positive);
  CHECK(ae_sign(*c.boundary_m - Rational(11)) == Sign::Negative);
}

TEST_CASE("boundary_m floor matches max_m for bounded irrational cases") {
  for (long s = 5; s <= 80; ++s) {
    for (unsigned n = 2; n <= 3; ++n) {
      const RootData rd = root_data(BigInt(s), n);
      if (rd.epsilon_is_zero || rd.k < 2) continue;
      const MaxMult mm = max_m(n, BigInt(s));
      REQUIRE(mm.kind == MaxMult::Kind::Bounded);
      const Certificate c = certificate(Instance{n, BigInt(s), BigInt(1)});
      REQUIRE(c.boundary_m.has_value());
      // max_m < boundary_m + 1 and boundary_m - max_m < 1... i.e.
      // floor semantics: max_m <= boundary_m < max_m + 1, except that an
      // integer boundary is itself attained, so use: boundary_m >= max_m
      // and boundary_m < max_m + 1.
      const Sign lower = ae_sign(*c.boundary_m - Rational(mm.value));
      CHECK((lower == Sign::Positive || lower == Sign::Zero));
      CHECK(ae_sign(*c.boundary_m - Rational(mm.value + 1)) == Sign::Negative);
    }
  }
}

TEST_CASE("certificate requires n >= 2") {
  CHECK_THROWS_AS(certificate(inst(1, 5, 1)), std::invalid_argument);
}

TEST_CASE("compare_mss classes") {
  CHECK(compare_mss(inst(2, 9, 2)) == MssComparison::Both);
  CHECK(compare_mss(inst(2, 5, 1)) == MssComparison::Both);
  CHECK(compare_mss(inst(2, 5, 2)) == MssComparison::Neither);
  CHECK(compare_mss(inst(2, 13, 2)) == MssComparison::OnlyMSS);
  CHECK(compare_mss(inst(2, 4, 2)) == MssComparison::OnlyNew);
  CHECK_THROWS_AS(compare_mss(inst(1, 4, 2)), std::invalid_argument);
}

TEST_CASE("bound_report aggregates") {
  const BoundReport r = bound_report(inst(2, 4, 2));
  CHECK(r.delta == 5);
  CHECK(r.k_bound == 5);
  REQUIRE(r.condition_holds.has_value());
  CHECK(*r.condition_holds);
  REQUIRE(r.sufficient_holds.has_value());
  CHECK(*r.sufficient_holds);
  REQUIRE(r.factor_results.size() == 1);
  CHECK(r.factor_results[0].i == 0);
  CHECK(r.factor_results[0].holds);
  REQUIRE(r.mss_comparison.has_value());
  CHECK(*r.mss_comparison == MssComparison::OnlyNew);

  const BoundReport line = bound_report(inst(1, 3, 2));
  CHECK(line.delta == 6);
  CHECK(line.k_bound == 6);
  CHECK_FALSE(line.condition_holds.has_value());
  CHECK_FALSE(line.sufficient_holds.has_value());
  CHECK(line.factor_results.empty());
  CHECK_FALSE(line.mss_comparison.has_value());

  const BoundReport big = bound_report(inst(3, 30, 5));
  CHECK(big.factor_results.size() == 2);
}
