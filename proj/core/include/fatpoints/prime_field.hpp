#pragma once

#include <cstdint>

namespace fatpoints::gf {

/// Moduli are restricted below 2^62 so that a + b never wraps a uint64_t
/// and 128-bit products of reduced operands stay exact.
inline constexpr std::uint64_t kMaxModulus = 1ULL << 62;

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Multiplicative inverse of a (not divisible by p); p must be prime.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin valid for every 64-bit input.
bool is_prime_u64(std::uint64_t x);

}  // namespace fatpoints::gf
