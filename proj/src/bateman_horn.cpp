#include "primedens/bateman_horn.hpp"

#include "primedens/errors.hpp"
#include "primedens/primality.hpp"

#include "parallel.hpp"
#include "prime_product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>

namespace primedens {
namespace {

using u128 = unsigned __int128;

void require_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw DomainError(std::to_string(p) + " is not prime");
    }
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= m - b ? a - (m - b) : a + b;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % p);
        }
        base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % p);
    }
    return result;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return d;
        }
    }
    return n;
}

// Forward differences of g at 0 mod p, so g(x+1) follows from g(x) by additions.
std::vector<std::uint64_t> difference_table(const IntPolynomial& g, std::uint64_t p) {
    const std::size_t h = g.degree();
    std::vector<std::uint64_t> d(h + 1);
    for (std::size_t j = 0; j <= h; ++j) {
        d[j] = poly_eval_mod(g, j, p);
    }
    for (std::size_t order = 1; order <= h; ++order) {
        for (std::size_t j = h; j >= order; --j) {
            d[j] = sub_mod(d[j], d[j - 1], p);
        }
    }
    return d;
}

} // namespace

PolynomialFamily::PolynomialFamily(std::vector<IntPolynomial> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) {
        throw ConfigError("polynomial family must not be empty");
    }
}

std::uint64_t PolynomialFamily::degree_product() const noexcept {
    std::uint64_t h = 1;
    for (const auto& g : polys_) {
        h *= g.degree();
    }
    return h;
}

std::uint64_t PolynomialFamily::degree_sum() const noexcept {
    std::uint64_t s = 0;
    for (const auto& g : polys_) {
        s += g.degree();
    }
    return s;
}

bool PolynomialFamily::all_linear() const noexcept {
    return std::all_of(polys_.begin(), polys_.end(), [](const auto& g) { return g.degree() == 1; });
}

std::string PolynomialFamily::to_string() const {
    std::string out;
    for (const auto& g : polys_) {
        if (!out.empty()) {
            out += ", ";
        }
        out += g.to_string();
    }
    return out;
}

std::uint64_t root_count(const PolynomialFamily& family, std::uint64_t p) {
    require_prime(p);
    std::vector<std::vector<std::uint64_t>> tables;
    tables.reserve(family.size());
    for (const auto& g : family.polys()) {
        tables.push_back(difference_table(g, p));
    }
    std::uint64_t roots = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        bool vanishes = false;
        for (auto& d : tables) {
            vanishes |= (d[0] == 0);
            for (std::size_t j = 0; j + 1 < d.size(); ++j) {
                d[j] = add_mod(d[j], d[j + 1], p);
            }
        }
        roots += vanishes ? 1 : 0;
    }
    return roots;
}

std::uint64_t root_count_linear(const PolynomialFamily& family, std::uint64_t p) {
    require_prime(p);
    std::vector<std::uint64_t> roots;
    for (const auto& g : family.polys()) {
        if (g.degree() != 1) {
            throw DomainError("root_count_linear on non-linear " + g.to_string());
        }
        const std::uint64_t b = poly_eval_mod(g, 0, p);
        const std::uint64_t a = sub_mod(poly_eval_mod(g, 1, p), b, p);
        if (a == 0) {
            if (b == 0) {
                return p;
            }
            continue;
        }
        roots.push_back(static_cast<std::uint64_t>(static_cast<u128>(b == 0 ? 0 : p - b) *
                                                   inverse_mod(a, p) % p));
    }
    std::sort(roots.begin(), roots.end());
    return static_cast<std::uint64_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

std::optional<std::uint64_t> fixed_prime_divisor(const PolynomialFamily& family) {
    // Above the total degree a prime can only vanish everywhere by dividing
    // some member's content.
    std::optional<std::uint64_t> best;
    for (const auto& g : family.polys()) {
        if (g.content() > 1) {
            const std::uint64_t q = smallest_prime_factor(g.content());
            best = best ? std::min(*best, q) : q;
        }
    }
    for (std::uint64_t p = 2; p <= family.degree_sum(); ++p) {
        if (best && p >= *best) {
            break;
        }
        if (is_prime_u64(p) && root_count(family, p) == p) {
            return p;
        }
    }
    return best;
}

BatemanHornConstant bateman_horn_constant(const PolynomialFamily& family, const PrimeTable& table,
                                          std::uint64_t p_limit, unsigned threads) {
    const auto primes = primes_up_to(table, p_limit);
    BatemanHornConstant result;
    result.requested_limit = p_limit;
    result.fixed_divisor = fixed_prime_divisor(family);

    const bool linear = family.all_linear();
    const std::uint64_t limit = linear ? p_limit : std::min(p_limit, kRootBruteForceCeiling);
    if (result.fixed_divisor) {
        result.constant = TruncatedConstant{0.0, limit, 0.0};
        return result;
    }

    const auto used = static_cast<std::size_t>(
        std::upper_bound(primes.begin(), primes.end(), limit) - primes.begin());
    std::vector<std::uint64_t> alpha(used);
    const std::uint64_t chunks = (used + 255) / 256;
    detail::parallel_for(chunks, threads, [&](std::uint64_t c) {
        const std::size_t end = std::min<std::size_t>(used, (c + 1) * 256);
        for (std::size_t i = c * 256; i < end; ++i) {
            const std::uint64_t p = primes[i];
            alpha[i] = (linear && p > kRootBruteForceCeiling) ? root_count_linear(family, p)
                                                              : root_count(family, p);
        }
    });

    const double k = static_cast<double>(family.size());
    std::size_t next = 0;
    result.constant = detail::truncated_log_product(primes, limit, 1.0, [&](std::uint64_t p) {
        const std::uint64_t a = alpha[next++];
        if (a == p) {
            return -std::numeric_limits<double>::infinity();
        }
        const double pd = static_cast<double>(p);
        return std::log1p(-static_cast<double>(a) / pd) - k * std::log1p(-1.0 / pd);
    });
    return result;
}

double predicted_density(const PolynomialFamily& family, double constant, double x) {
    if (!(x > 1.0)) {
        throw DomainError("predicted density needs x > 1");
    }
    if (constant < 0.0) {
        throw DomainError("Bateman-Horn constant must be nonnegative");
    }
    const double log_x = std::log(x);
    return constant / (static_cast<double>(family.degree_product()) *
                       std::pow(log_x, static_cast<double>(family.size())));
}

std::uint64_t count_prime_values_in(const PolynomialFamily& family, const PrimeTable& table,
                                    std::uint64_t lo, std::uint64_t hi, ValuePrimality mode,
                                    unsigned threads) {
    lo = std::max<std::uint64_t>(lo, 1);
    if (hi < lo) {
        return 0;
    }
    if (hi > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw ArithmeticError("x beyond the 64-bit evaluation ceiling");
    }
    const std::uint64_t limit = table.limit();
    auto value_is_prime = [&](std::int64_t v) {
        if (v < 2) {
            return false;
        }
        const auto u = static_cast<std::uint64_t>(v);
        return u <= limit ? table.is_prime(u) : is_prime_u64(u);
    };
    // Every member is evaluated and range-checked at every x, so overflow
    // and sieve-range errors never depend on which value was composite.
    auto evaluate = [&](std::uint64_t x, std::span<std::int64_t> values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            values[i] = poly_eval(family.polys()[i], static_cast<std::int64_t>(x));
            if (mode == ValuePrimality::sieve_only && values[i] > 0 &&
                static_cast<std::uint64_t>(values[i]) > limit) {
                throw RangeError("polynomial value " + std::to_string(values[i]) +
                                 " exceeds sieve limit " + std::to_string(limit));
            }
        }
    };

    constexpr std::uint64_t kChunk = 1 << 16;
    const std::uint64_t chunks = (hi - lo) / kChunk + 1;
    std::vector<std::uint64_t> partial(chunks, 0);
    detail::parallel_for(chunks, threads, [&](std::uint64_t c) {
        const std::uint64_t begin = lo + c * kChunk;
        const std::uint64_t end = std::min(hi, begin + kChunk - 1);
        std::vector<std::int64_t> values(family.size());
        std::uint64_t count = 0;
        for (std::uint64_t x = begin; x <= end; ++x) {
            evaluate(x, values);
            count += std::all_of(values.begin(), values.end(), value_is_prime) ? 1 : 0;
        }
        partial[c] = count;
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : partial) {
        total += c;
    }
    return total;
}

std::uint64_t count_prime_values(const PolynomialFamily& family, const PrimeTable& table,
                                 std::uint64_t x_limit, ValuePrimality mode, unsigned threads) {
    return count_prime_values_in(family, table, 1, x_limit, mode, threads);
}

} // namespace primedens
