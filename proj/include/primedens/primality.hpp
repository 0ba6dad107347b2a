#pragma once

#include <cstdint>

namespace primedens {

/// Integer square root: the largest r with r*r <= n. Exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// Deterministic primality for any 64-bit n.
///
/// Trial division by the primes below 64, then strong-pseudoprime tests to
/// the first twelve prime bases, which has no counterexample below 3.3e24.
/// The answer is exact, not probabilistic.
bool is_prime_u64(std::uint64_t n) noexcept;

} // namespace primedens
