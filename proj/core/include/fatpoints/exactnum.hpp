#pragma once

#include <gmpxx.h>

namespace fatpoints::exactnum {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Outcome of comparing a nonnegative integer a against b * s^(j/n).
enum class RadicalOrdering { Less, Equal, Greater };

/// C(a, b); zero when b > a. Requires a >= 0.
BigInt binomial(const BigInt& a, unsigned long b);

/// k = floor(s^(1/n)), the unique k with k^n <= s < (k+1)^n. Requires s >= 1, n >= 1.
BigInt int_nth_root(const BigInt& s, unsigned n);

/// floor(t * s^(1/n)) for t >= 0, s >= 1, computed as floor((t^n * s)^(1/n)).
BigInt floor_mul_nth_root(const BigInt& t, const BigInt& s, unsigned n);

// Orders a against b * s^(j/n) by comparing a^n with b^n * s^j. Both
// operands must be nonnegative so that raising to the n-th power is
// monotone; every inequality decision in the bounds module routes
// through here.
RadicalOrdering cmp_radical(const BigInt& a, const BigInt& b, const BigInt& s,
                            unsigned j, unsigned n);

/// a^e with machine-sized exponent.
BigInt pow_big(const BigInt& a, unsigned long e);

}  // namespace fatpoints::exactnum
