#pragma once

#include "primedens/offset_tuple.hpp"
#include "primedens/prime_table.hpp"
#include "primedens/summation.hpp"

#include <cstdint>
#include <vector>

namespace primedens {

/// Largest prime for which residue counts are found by scanning every residue.
inline constexpr std::uint64_t kResidueBruteForceCeiling = 100'000;

struct SingularSeries {
    OffsetTuple tuple;
    TruncatedConstant constant;
    bool admissible = true;
};

struct Fraction {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    double value() const noexcept {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// w(p): the number of residues x mod p with prod_i (x + h_i) = 0 (mod p).
/// Scans all residues for p <= kResidueBruteForceCeiling and counts distinct
/// offsets mod p above it. Throws DomainError if p is not prime.
std::uint64_t residue_count(const OffsetTuple& tuple, std::uint64_t p);

/// w(p) by scanning x = 0..p-1. Requires p prime.
std::uint64_t residue_count_by_scan(const OffsetTuple& tuple, std::uint64_t p);

/// w(p) as the number of distinct offsets mod p. Requires p prime.
std::uint64_t residue_count_by_offsets(const OffsetTuple& tuple, std::uint64_t p);

/// True iff w(p) < p for every prime p <= k.
bool is_admissible(const OffsetTuple& tuple);

/// prod_{p <= p_limit} (1 - w(p)/p) / (1 - 1/p)^k. Inadmissible tuples give
/// exactly 0 and admissible = false. Throws RangeError if p_limit > table.limit().
SingularSeries singular_series(const OffsetTuple& tuple, const PrimeTable& table,
                               std::uint64_t p_limit, unsigned threads = 1);

/// 2 * prod_{2 < p <= p_limit} p(p-2)/(p-1)^2.
TruncatedConstant twin_constant_closed_form(const PrimeTable& table, std::uint64_t p_limit);

/// Probability that x + 2 avoids p given that x does: 1 for p = 2,
/// otherwise (p-2)/(p-1). Throws DomainError if p is not prime.
Fraction conditional_factor(std::uint64_t p);

/// exp(gamma)/2 * prod_{2 < p <= isqrt(x)} (p-2)/(p-1).
double conditional_probability_estimate(const PrimeTable& table, std::uint64_t x);

/// 2 * prod_{2 < p <= isqrt(x)} p(p-2)/(p-1)^2, bit-identical to
/// twin_constant_closed_form(isqrt(x)).value. Requires x >= 4.
double dependency_ratio_product(const PrimeTable& table, std::uint64_t x);

/// #{x <= x_limit : x + h_i prime for all i}. Requires x_limit + max offset <= table.limit().
std::uint64_t count_constellations(const PrimeTable& table, const OffsetTuple& tuple,
                                   std::uint64_t x_limit, unsigned threads = 1);

/// Same count restricted to lo <= x <= hi.
std::uint64_t count_constellations_in(const PrimeTable& table, const OffsetTuple& tuple,
                                      std::uint64_t lo, std::uint64_t hi, unsigned threads = 1);

/// [pi_2(x) / pi(x)] / [pi(x) / x] with pi_2 the twin count.
/// Requires x + 2 <= table.limit() and pi(x) > 0.
double empirical_conditional_ratio(const PrimeTable& table, std::uint64_t x, unsigned threads = 1);

} // namespace primedens
