#include "fatpoints/exactnum.hpp"

#include <stdexcept>

namespace fatpoints::exactnum {

BigInt binomial(const BigInt& a, unsigned long b) {
  if (sgn(a) < 0) throw std::invalid_argument("binomial: upper index must be nonnegative");
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b);
  return r;
}

BigInt int_nth_root(const BigInt& s, unsigned n) {
  if (n == 0) throw std::invalid_argument("int_nth_root: n must be positive");
  if (sgn(s) <= 0) throw std::invalid_argument("int_nth_root: s must be >= 1");
  BigInt r;
  mpz_root(r.get_mpz_t(), s.get_mpz_t(), n);
  return r;
}

BigInt floor_mul_nth_root(const BigInt& t, const BigInt& s, unsigned n) {
  if (n == 0) throw std::invalid_argument("floor_mul_nth_root: n must be positive");
  if (sgn(t) < 0) throw std::invalid_argument("floor_mul_nth_root: t must be >= 0");
  if (sgn(s) <= 0) throw std::invalid_argument("floor_mul_nth_root: s must be >= 1");
  // t * s^(1/n) = (t^n * s)^(1/n), and flooring commutes with the rewrite.
  BigInt radicand = pow_big(t, n) * s;
  if (sgn(radicand) == 0) return BigInt(0);
  BigInt r;
  mpz_root(r.get_mpz_t(), radicand.get_mpz_t(), n);
  return r;
}

RadicalOrdering cmp_radical(const BigInt& a, const BigInt& b, const BigInt& s,
                            unsigned j, unsigned n) {
  if (n == 0) throw std::invalid_argument("cmp_radical: n must be positive");
  if (sgn(a) < 0 || sgn(b) < 0)
    throw std::invalid_argument("cmp_radical: operands must be nonnegative");
  if (sgn(s) <= 0) throw std::invalid_argument("cmp_radical: s must be >= 1");
  BigInt lhs = pow_big(a, n);
  BigInt rhs = pow_big(b, n) * pow_big(s, j);
  int c = cmp(lhs, rhs);
  if (c < 0) return RadicalOrdering::Less;
  if (c > 0) return RadicalOrdering::Greater;
  return RadicalOrdering::Equal;
}

BigInt pow_big(const BigInt& a, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

}  // namespace fatpoints::exactnum
