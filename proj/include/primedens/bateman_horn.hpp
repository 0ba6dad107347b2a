#pragma once

#include "primedens/polynomial.hpp"
#include "primedens/prime_table.hpp"
#include "primedens/summation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace primedens {

/// Largest prime whose root count is found by scanning residues. For
/// families with a non-linear member the constant is truncated here.
inline constexpr std::uint64_t kRootBruteForceCeiling = 100'000;

class PolynomialFamily {
public:
    /// Throws ConfigError for an empty family.
    explicit PolynomialFamily(std::vector<IntPolynomial> polys);

    const std::vector<IntPolynomial>& polys() const noexcept { return polys_; }
    std::size_t size() const noexcept { return polys_.size(); }

    /// H = product of the degrees.
    std::uint64_t degree_product() const noexcept;
    std::uint64_t degree_sum() const noexcept;
    bool all_linear() const noexcept;

    /// "x, x+2"
    std::string to_string() const;

private:
    std::vector<IntPolynomial> polys_;
};

struct BatemanHornConstant {
    // truncation_limit is the bound actually used, which is at most
    // kRootBruteForceCeiling when the family has a non-linear member.
    TruncatedConstant constant;
    std::uint64_t requested_limit = 0;
    // smallest prime dividing every value of the product, if any
    std::optional<std::uint64_t> fixed_divisor;
};

/// alpha(p): residues x mod p with prod_i g_i(x) = 0 (mod p), by scanning
/// all p residues. Throws DomainError if p is not prime.
std::uint64_t root_count(const PolynomialFamily& family, std::uint64_t p);

/// alpha(p) for a family of linear polynomials from their roots a*x + b = 0.
/// Throws DomainError if p is not prime or a member is not linear.
std::uint64_t root_count_linear(const PolynomialFamily& family, std::uint64_t p);

/// Smallest prime p with alpha(p) = p, if any.
std::optional<std::uint64_t> fixed_prime_divisor(const PolynomialFamily& family);

/// prod_{p <= p_limit} (1 - alpha(p)/p) / (1 - 1/p)^k. Exactly 0 when the
/// family has a fixed prime divisor. Throws RangeError if p_limit > table.limit().
BatemanHornConstant bateman_horn_constant(const PolynomialFamily& family, const PrimeTable& table,
                                          std::uint64_t p_limit, unsigned threads = 1);

/// E / (H * ln^k x). Throws DomainError for x <= 1 or E < 0.
double predicted_density(const PolynomialFamily& family, double constant, double x);

enum class ValuePrimality {
    // every value must lie inside the sieve, else RangeError
    sieve_only,
    // values beyond the sieve go to the deterministic 64-bit test
    deterministic_fallback,
};

/// #{1 <= x <= x_limit : g_i(x) prime for all i}; values below 2 never count.
std::uint64_t count_prime_values(const PolynomialFamily& family, const PrimeTable& table,
                                 std::uint64_t x_limit,
                                 ValuePrimality mode = ValuePrimality::sieve_only,
                                 unsigned threads = 1);

/// Same count restricted to lo <= x <= hi.
std::uint64_t count_prime_values_in(const PolynomialFamily& family, const PrimeTable& table,
                                    std::uint64_t lo, std::uint64_t hi,
                                    ValuePrimality mode = ValuePrimality::sieve_only,
                                    unsigned threads = 1);

} // namespace primedens
