#include <fatpoints/prime_field.hpp>

#include <stdexcept>

namespace fatpoints::gf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

}  // namespace

u64 add(u64 a, u64 b, u64 p) {
  const u64 s = a + b;  // no wrap: both operands below 2^62
  return s >= p ? s - p : s;
}

u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  u64 acc = base % p;
  while (exp > 0) {
    if (exp & 1ULL) {
      result = mul(result, acc, p);
    }
    acc = mul(acc, acc, p);
    exp >>= 1;
  }
  return result;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) {
    throw std::invalid_argument("gf::inv: argument divisible by the modulus");
  }
  return pow(a % p, p - 2, p);  // Fermat; p prime by contract
}

bool is_prime_u64(u64 x) {
  if (x < 2) {
    return false;
  }
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (x % q == 0) {
      return x == q;
    }
  }
  u64 d = x - 1;
  unsigned r = 0;
  while ((d & 1ULL) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic witness set for all 64-bit integers (Sorenson-Webster).
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 y = 1;
    {
      // Square-and-multiply with 128-bit products; x may exceed kMaxModulus
      // here, which is fine because we never mix with field helpers.
      u64 acc = a % x;
      u64 e = d;
      while (e > 0) {
        if (e & 1ULL) {
          y = static_cast<u64>(static_cast<u128>(y) * acc % x);
        }
        acc = static_cast<u64>(static_cast<u128>(acc) * acc % x);
        e >>= 1;
      }
    }
    if (y == 1 || y == x - 1) {
      continue;
    }
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      y = static_cast<u64>(static_cast<u128>(y) * y % x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

}  // namespace fatpoints::gf
