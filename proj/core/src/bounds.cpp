#include <fatpoints/bounds.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace fatpoints::bounds {

namespace {

using exactnum::RadicalOrdering;

Rational ratio(BigInt num, BigInt den) {
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

void require_part_b(const Instance& inst, const char* op) {
  if (inst.n < 2) {
    throw std::invalid_argument(std::string(op) +
                                ": requires n >= 2 (the condition divides by n-1)");
  }
}

}  // namespace

void validate(const Instance& inst) {
  if (inst.n < 1) {
    throw std::invalid_argument("Instance: n must be >= 1");
  }
  if (inst.s < 1) {
    throw std::invalid_argument("Instance: s must be >= 1");
  }
  if (inst.m < 1) {
    throw std::invalid_argument("Instance: m must be >= 1");
  }
}

RootData root_data(const BigInt& s, unsigned n) {
  if (s < 1 || n < 1) {
    throw std::invalid_argument("root_data: requires s >= 1 and n >= 1");
  }
  RootData rd;
  rd.s = s;
  rd.n = n;
  rd.k = exactnum::int_nth_root(s, n);
  rd.epsilon_is_zero = (exactnum::pow_big(rd.k, n) == s);
  return rd;
}

BigInt delta_bound(const Instance& inst) {
  validate(inst);
  const BigInt t = inst.m + inst.n - 1;
  return exactnum::floor_mul_nth_root(t, inst.s, inst.n) - (inst.n - 1);
}

bool demailly_condition(const Instance& inst) {
  validate(inst);
  require_part_b(inst, "demailly_condition");
  const RootData rd = root_data(inst.s, inst.n);
  if (rd.k < 2) {
    return false;
  }
  // (n-1)(k-2) >= 2(m-1)(s^(1/n) - k)  <=>
  // (n-1)(k-2) + 2(m-1)k >= 2(m-1) s^(1/n).
  const BigInt lhs = BigInt(inst.n - 1) * (rd.k - 2) + 2 * (inst.m - 1) * rd.k;
  const BigInt rhs_coeff = 2 * (inst.m - 1);
  const RadicalOrdering ord =
      exactnum::cmp_radical(lhs, rhs_coeff, inst.s, 1, inst.n);
  return ord == RadicalOrdering::Greater || ord == RadicalOrdering::Equal;
}

MaxMult max_m(unsigned n, const BigInt& s) {
  if (n < 2) {
    throw std::invalid_argument("max_m: requires n >= 2");
  }
  if (s < 1) {
    throw std::invalid_argument("max_m: requires s >= 1");
  }
  const RootData rd = root_data(s, n);
  MaxMult out;
  if (rd.k < 2) {
    out.kind = MaxMult::Kind::None;
    return out;
  }
  if (rd.epsilon_is_zero) {
    out.kind = MaxMult::Kind::Unbounded;
    return out;
  }
  const auto holds = [&](const BigInt& m) {
    return demailly_condition(Instance{n, s, m});
  };
  // holds(1) is true whenever k >= 2; the predicate is antitone in m, so
  // grow an exponential bracket [lo, hi) with holds(lo) and !holds(hi),
  // then binary-search the threshold.
  BigInt lo = 1;
  BigInt hi = 2;
  while (holds(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.kind = MaxMult::Kind::Bounded;
  out.value = lo;
  return out;
}

BigInt k_bound(const Instance& inst) {
  validate(inst);
  const RootData rd = root_data(inst.s, inst.n);
  return rd.k * (inst.m + inst.n - 1) - (inst.n - 1);
}

bool sufficient_condition(const Instance& inst) {
  validate(inst);
  const RootData rd = root_data(inst.s, inst.n);
  const BigInt t = inst.m + inst.n - 1;
  const BigInt lhs = exactnum::binomial(rd.k * t + 1, inst.n);
  const BigInt rhs = exactnum::binomial(t, inst.n) * inst.s;
  return lhs > rhs;
}

bool factor_inequality(const Instance& inst, unsigned i) {
  validate(inst);
  if (i > (inst.n - 1) / 2) {
    throw std::invalid_argument("factor_inequality: i out of range");
  }
  const RootData rd = root_data(inst.s, inst.n);
  const BigInt t = inst.m + inst.n - 1;
  const BigInt base = rd.k * t + 1;
  // (base - i)(base - (n-1) + i) > s^(2/n) (t - i)(m + i), all factors
  // positive for a valid instance, so the powering comparison applies.
  const BigInt lhs = (base - i) * (base - (inst.n - 1) + i);
  const BigInt rhs_coeff = (t - i) * (inst.m + i);
  return exactnum::cmp_radical(lhs, rhs_coeff, inst.s, 2, inst.n) ==
         RadicalOrdering::Greater;
}

Certificate certificate(const Instance& inst) {
  validate(inst);
  require_part_b(inst, "certificate");
  const unsigned n = inst.n;
  const RootData rd = root_data(inst.s, n);
  const BigInt& k = rd.k;
  const Rational kq(k);

  const AlgebraicExpr theta = AlgebraicExpr::root(inst.s, n);
  const AlgebraicExpr eps = theta - kq;

  AlgebraicExpr A = Rational(k * k) - theta * theta;
  AlgebraicExpr B =
      Rational(BigInt(n - 1)) *
          (Rational(k * k) - (Rational(1) + Rational(2) * eps) * kq - eps * eps) +
      Rational(2 * k);

  // C_i = ((k+eps)^2 - 1)(i^2 - (n-1)i) + (k(n-1)+1)((k-1)(n-1)+1).
  const AlgebraicExpr theta_sq_m1 = theta * theta - Rational(1);
  const Rational tail(BigInt(k * (n - 1) + 1) * BigInt((k - 1) * (n - 1) + 1));
  std::vector<AlgebraicExpr> C_list;
  for (unsigned i = 0; i <= (n - 1) / 2; ++i) {
    const Rational iq(BigInt(i) * BigInt(i) - BigInt(n - 1) * BigInt(i));
    C_list.push_back(theta_sq_m1 * iq + tail);
  }

  const Rational first = ratio(BigInt(2) * k - 1, 2) * Rational(BigInt(n - 1)) + 1;
  const AlgebraicExpr half_span = theta * ratio(BigInt(n - 1), 2);
  AlgebraicExpr C_min = Rational(first * first) - half_span * half_span;

  std::optional<AlgebraicExpr> f;
  std::optional<AlgebraicExpr> g;
  std::optional<AlgebraicExpr> boundary_m;
  if (!rd.epsilon_is_zero) {
    // 1/eps = 1/(theta - k) = (sum_{j<n} k^(n-1-j) theta^j) / (s - k^n),
    // the rationalized form of the geometric telescoping identity.
    AlgebraicExpr acc = AlgebraicExpr::constant(Rational(0));
    AlgebraicExpr theta_pow = AlgebraicExpr::constant(Rational(1));
    for (unsigned j = 0; j < n; ++j) {
      acc = acc + Rational(exactnum::pow_big(k, n - 1 - j)) * theta_pow;
      if (j + 1 < n) {
        theta_pow = theta_pow * theta;
      }
    }
    const AlgebraicExpr inv_eps =
        acc * ratio(BigInt(1), inst.s - exactnum::pow_big(k, n));

    const Rational half = ratio(BigInt(1), 2);
    const Rational k2q(k * k);
    f = (inv_eps * half - half) * k2q +
        (Rational(2) - eps - inv_eps) * kq -
        (Rational(3) - eps) * (Rational(1) - eps) * ratio(BigInt(1), 4);
    g = (inv_eps - Rational(1)) * k2q +
        (Rational(5) - Rational(3) * eps - Rational(2) * inv_eps) * kq -
        (Rational(1) - eps) * (Rational(1) - eps);
    boundary_m = inv_eps * ratio(BigInt(n - 1) * (k - 2), 2) + Rational(1);
  }

  Certificate cert{std::move(A),
                   std::move(B),
                   std::move(C_list),
                   std::move(C_min),
                   std::move(f),
                   std::move(g),
                   std::move(boundary_m),
                   Sign::Indeterminate,
                   Sign::Indeterminate,
                   std::nullopt,
                   std::nullopt};
  cert.sign_A = algebraic::ae_sign(cert.A);
  cert.sign_C_min = algebraic::ae_sign(cert.C_min);
  if (cert.f) {
    cert.sign_f = algebraic::ae_sign(*cert.f);
  }
  if (cert.g) {
    cert.sign_g = algebraic::ae_sign(*cert.g);
  }
  return cert;
}

MssComparison compare_mss(const Instance& inst) {
  validate(inst);
  require_part_b(inst, "compare_mss");
  const RootData rd = root_data(inst.s, inst.n);
  const bool mss = rd.k >= inst.m + 1;
  const bool fresh = demailly_condition(inst);
  if (mss && fresh) {
    return MssComparison::Both;
  }
  if (fresh) {
    return MssComparison::OnlyNew;
  }
  if (mss) {
    return MssComparison::OnlyMSS;
  }
  return MssComparison::Neither;
}

BoundReport bound_report(const Instance& inst) {
  validate(inst);
  BoundReport report;
  report.delta = delta_bound(inst);
  report.k_bound = k_bound(inst);
  if (inst.n >= 2) {
    report.condition_holds = demailly_condition(inst);
    report.sufficient_holds = sufficient_condition(inst);
    for (unsigned i = 0; i <= (inst.n - 1) / 2; ++i) {
      report.factor_results.push_back(FactorResult{i, factor_inequality(inst, i)});
    }
    report.mss_comparison = compare_mss(inst);
  }
  return report;
}

}  // namespace fatpoints::bounds
