#pragma once

#include "primedens/prime_table.hpp"

#include <cstdint>

namespace primedens {

namespace constants {
inline constexpr double kEulerGamma = 0.57721566490153286;
/// exp(gamma) / 2 = 0.8905362...
double half_e_gamma() noexcept;
} // namespace constants

/// prod_{p <= y} (1 - 1/p), accumulated as a compensated sum of log1p(-1/p).
/// Returns 1 for y < 2.
double mertens_product(const PrimeTable& table, std::uint64_t y);

/// 1 / ln x. Throws DomainError for x <= 1.
double heuristic_density(double x);

/// (1 / ln x) / prod_{p <= isqrt(x)} (1 - 1/p); tends to exp(gamma)/2.
/// Requires x >= 4 and isqrt(x) <= table.limit().
double dependency_ratio(const PrimeTable& table, std::uint64_t x);

/// mertens_product(y) * exp(gamma) * ln y; tends to 1. Requires y >= 285.
double mertens_theorem_check(const PrimeTable& table, std::uint64_t y);

} // namespace primedens
