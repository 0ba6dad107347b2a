#pragma once

#include "primedens/summation.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

namespace primedens::detail {

/// prefactor * prod over `primes` of exp(log_factor(p)), together with the
/// same product restricted to p <= truncation_limit / 2. A log_factor of
/// -infinity marks a vanishing factor and makes the whole product exactly 0.
template <class LogFactor>
TruncatedConstant truncated_log_product(std::span<const std::uint64_t> primes,
                                        std::uint64_t truncation_limit, double prefactor,
                                        LogFactor&& log_factor) {
    CompensatedSum log_sum;
    double half_sum = 0.0;
    const std::uint64_t half_limit = truncation_limit / 2;
    for (std::uint64_t p : primes) {
        if (p > truncation_limit) {
            break;
        }
        const double term = log_factor(p);
        if (term == -std::numeric_limits<double>::infinity()) {
            return TruncatedConstant{0.0, truncation_limit, 0.0};
        }
        log_sum.add(term);
        if (p <= half_limit) {
            half_sum = log_sum.value();
        }
    }
    const double value = prefactor * std::exp(log_sum.value());
    const double half = prefactor * std::exp(half_sum);
    return TruncatedConstant{value, truncation_limit, doubling_delta(value, half)};
}

} // namespace primedens::detail
