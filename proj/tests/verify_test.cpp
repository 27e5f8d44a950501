#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <tuple>
#include <vector>

#include <fatpoints/verify.hpp>

using namespace fatpoints::verify;
namespace interpolation = fatpoints::interpolation;
namespace bounds = fatpoints::bounds;
using fatpoints::exactnum::BigInt;
using fatpoints::exactnum::Rational;

namespace {

interpolation::PrimeModulus default_prime() {
  return interpolation::PrimeModulus::checked(interpolation::kDefaultPrime);
}

}  // namespace

TEST_CASE("run_instance on five points") {
  const ExperimentReport r = run_instance(2, BigInt(5), 2, default_prime(), 1);
  CHECK(r.alpha == 4);
  CHECK(r.delta == 5);
  REQUIRE(r.k_bound.has_value());
  CHECK(*r.k_bound == 5);
  REQUIRE(r.condition_holds.has_value());
  CHECK_FALSE(*r.condition_holds);
  CHECK_FALSE(r.thm_b_ok.has_value());
  CHECK(r.demailly_ratio == Rational(5, 3));
  CHECK(r.thm_a_ok);
  CHECK(r.ratio_le_k);
  CHECK(r.seed == 1);
  CHECK(r.prime == interpolation::kDefaultPrime);
}

TEST_CASE("run_instance with condition true fills thm_b") {
  const ExperimentReport r = run_instance(2, BigInt(9), 3, default_prime(), 1);
  CHECK(r.alpha == 9);
  REQUIRE(r.condition_holds.has_value());
  CHECK(*r.condition_holds);
  REQUIRE(r.thm_b_ok.has_value());
  CHECK(*r.thm_b_ok);  // alpha = 9 <= k_bound = 3*4-1 = 11
}

TEST_CASE("run_instance point-set overload matches the sampled one") {
  const auto pts = interpolation::sample_points(2, BigInt(7), default_prime(), 5);
  const ExperimentReport a = run_instance(pts, 2);
  const ExperimentReport b = run_instance(2, BigInt(7), 2, default_prime(), 5);
  CHECK(a.alpha == b.alpha);
  CHECK(a.delta == b.delta);
  CHECK(a.demailly_ratio == b.demailly_ratio);
  CHECK(a.thm_a_ok == b.thm_a_ok);
  CHECK(a.ratio_le_k == b.ratio_le_k);
  CHECK(a.seed == 0);
  CHECK(b.seed == 5);
}

TEST_CASE("run_instance on the line") {
  const ExperimentReport r =
      run_instance(1, BigInt(3), 2, interpolation::PrimeModulus::checked(31), 1);
  CHECK(r.alpha == 6);
  CHECK(r.delta == 6);
  CHECK_FALSE(r.k_bound.has_value());
  CHECK_FALSE(r.condition_holds.has_value());
  CHECK_FALSE(r.thm_b_ok.has_value());
  CHECK(r.thm_a_ok);
}

TEST_CASE("invariant suite passes on regular configurations") {
  const auto p9 = interpolation::sample_points(2, BigInt(9), default_prime(), 1);
  const InvariantReport r = invariant_suite(p9, 3);
  CHECK(r.pass);
  CHECK(r.first_failure.empty());
  CHECK(r.alphas == std::vector<unsigned>{3, 6, 9});

  const auto p5 = interpolation::sample_points(2, BigInt(5), default_prime(), 2);
  CHECK(invariant_suite(p5, 4).pass);

  CHECK_THROWS_AS(invariant_suite(p9, 1), std::invalid_argument);
}

TEST_CASE("theorem sweep finds no violations and is thread-deterministic") {
  std::vector<SweepRow> seq_rows;
  const SweepSummary seq = theorem_sweep(
      2, 3, 40, 5, 1, [&](const SweepRow& r) { seq_rows.push_back(r); });
  CHECK(seq.rows == 2 * 40 * 5);
  CHECK(seq.violations == 0);
  REQUIRE(seq_rows.size() == seq.rows);

  std::vector<SweepRow> par_rows;
  const SweepSummary par = theorem_sweep(
      2, 3, 40, 5, 4, [&](const SweepRow& r) { par_rows.push_back(r); });
  CHECK(par.rows == seq.rows);
  CHECK(par.violations == 0);
  REQUIRE(par_rows.size() == seq_rows.size());
  for (std::size_t i = 0; i < seq_rows.size(); ++i) {
    CHECK(par_rows[i].n == seq_rows[i].n);
    CHECK(par_rows[i].s == seq_rows[i].s);
    CHECK(par_rows[i].m == seq_rows[i].m);
    CHECK(par_rows[i].condition_holds == seq_rows[i].condition_holds);
    CHECK(par_rows[i].sufficient_holds == seq_rows[i].sufficient_holds);
    CHECK(par_rows[i].factor_ok == seq_rows[i].factor_ok);
    CHECK(par_rows[i].mss_class == seq_rows[i].mss_class);
    CHECK(par_rows[i].violation == seq_rows[i].violation);
  }

  // Rows arrive sorted by (n, s, m) with every cell present.
  for (std::size_t i = 1; i < seq_rows.size(); ++i) {
    const auto& a = seq_rows[i - 1];
    const auto& b = seq_rows[i];
    const auto ka = std::tuple(a.n, a.s, a.m);
    const auto kb = std::tuple(b.n, b.s, b.m);
    CHECK(ka < kb);
  }
}

TEST_CASE("sweep row semantics match the single-instance operations") {
  std::vector<SweepRow> rows;
  theorem_sweep(2, 2, 15, 3, 1, [&](const SweepRow& r) { rows.push_back(r); });
  for (const auto& r : rows) {
    const bounds::Instance inst{static_cast<unsigned>(r.n), BigInt(r.s),
                                BigInt(r.m)};
    CHECK(r.condition_holds == bounds::demailly_condition(inst));
    CHECK(r.sufficient_holds == bounds::sufficient_condition(inst));
    bool all_factors = true;
    for (unsigned i = 0; i <= (inst.n - 1) / 2; ++i) {
      all_factors = all_factors && bounds::factor_inequality(inst, i);
    }
    CHECK(r.factor_ok == all_factors);
    CHECK(r.mss_class == bounds::compare_mss(inst));
    CHECK(r.violation ==
          (r.condition_holds && !(r.sufficient_holds && r.factor_ok)));
  }
}

TEST_CASE("theorem sweep rejects n_min < 2") {
  CHECK_THROWS_AS(theorem_sweep(1, 2, 5, 2, 1, [](const SweepRow&) {}),
                  std::invalid_argument);
}

TEST_CASE("chudnovsky report") {
  const auto p5 = interpolation::sample_points(2, BigInt(5), default_prime(), 1);
  const ChudnovskyReport r = chudnovsky_report(p5);
  CHECK(r.alpha == 2);
  CHECK(r.ratio == Rational(3, 2));
  CHECK(r.k == 2);
  CHECK(r.ratio_le_k);

  const auto p4 = interpolation::sample_points(2, BigInt(4), default_prime(), 1);
  CHECK(chudnovsky_report(p4).alpha == 2);
}
