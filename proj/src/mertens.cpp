#include "primedens/mertens.hpp"

#include "primedens/errors.hpp"
#include "primedens/primality.hpp"
#include "primedens/summation.hpp"

#include <cmath>
#include <string>

namespace primedens {

double constants::half_e_gamma() noexcept {
    return std::exp(kEulerGamma) / 2.0;
}

double mertens_product(const PrimeTable& table, std::uint64_t y) {
    CompensatedSum log_sum;
    for (std::uint64_t p : primes_up_to(table, y)) {
        log_sum.add(std::log1p(-1.0 / static_cast<double>(p)));
    }
    return std::exp(log_sum.value());
}

double heuristic_density(double x) {
    if (!(x > 1.0)) {
        throw DomainError("heuristic density needs x > 1");
    }
    return 1.0 / std::log(x);
}

double dependency_ratio(const PrimeTable& table, std::uint64_t x) {
    if (x < 4) {
        throw DomainError("dependency ratio needs x >= 4, got " + std::to_string(x));
    }
    const std::uint64_t root = isqrt(x);
    if (root > table.limit()) {
        throw RangeError("dependency ratio at x = " + std::to_string(x) + " needs a sieve to " +
                         std::to_string(root));
    }
    return heuristic_density(static_cast<double>(x)) / mertens_product(table, root);
}

double mertens_theorem_check(const PrimeTable& table, std::uint64_t y) {
    if (y < 285) {
        throw DomainError("Mertens check needs y >= 285, got " + std::to_string(y));
    }
    return mertens_product(table, y) * std::exp(constants::kEulerGamma) *
           std::log(static_cast<double>(y));
}

} // namespace primedens
