#include "primedens/constellations.hpp"

#include "primedens/errors.hpp"
#include "primedens/mertens.hpp"
#include "primedens/primality.hpp"

#include "parallel.hpp"
#include "prime_product.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace primedens {
namespace {

void require_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw DomainError(std::to_string(p) + " is not prime");
    }
}

// 64 flags starting at odd index j; zero past the end of the table.
std::uint64_t flags_at(std::span<const std::uint64_t> flags, std::uint64_t j) {
    const std::uint64_t word = j / 64;
    const unsigned shift = static_cast<unsigned>(j % 64);
    const std::uint64_t low = word < flags.size() ? flags[word] : 0;
    if (shift == 0) {
        return low;
    }
    const std::uint64_t high = word + 1 < flags.size() ? flags[word + 1] : 0;
    return (low >> shift) | (high << (64 - shift));
}

constexpr std::uint64_t kWordsPerChunk = 1 << 14;

} // namespace

std::uint64_t residue_count_by_scan(const OffsetTuple& tuple, std::uint64_t p) {
    // residue of x + h_i, advanced in lockstep with x
    std::vector<std::uint64_t> residues;
    residues.reserve(tuple.size());
    for (std::uint64_t h : tuple.offsets()) {
        residues.push_back(h % p);
    }
    std::uint64_t hits = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        bool vanishes = false;
        for (std::uint64_t& r : residues) {
            vanishes |= (r == 0);
            if (++r == p) {
                r = 0;
            }
        }
        hits += vanishes ? 1 : 0;
    }
    return hits;
}

std::uint64_t residue_count_by_offsets(const OffsetTuple& tuple, std::uint64_t p) {
    std::vector<std::uint64_t> classes;
    classes.reserve(tuple.size());
    for (std::uint64_t h : tuple.offsets()) {
        classes.push_back(h % p);
    }
    std::sort(classes.begin(), classes.end());
    return static_cast<std::uint64_t>(std::unique(classes.begin(), classes.end()) - classes.begin());
}

std::uint64_t residue_count(const OffsetTuple& tuple, std::uint64_t p) {
    require_prime(p);
    if (p <= kResidueBruteForceCeiling) {
        return residue_count_by_scan(tuple, p);
    }
    return residue_count_by_offsets(tuple, p);
}

bool is_admissible(const OffsetTuple& tuple) {
    for (std::uint64_t p = 2; p <= tuple.size(); ++p) {
        if (is_prime_u64(p) && residue_count(tuple, p) == p) {
            return false;
        }
    }
    return true;
}

SingularSeries singular_series(const OffsetTuple& tuple, const PrimeTable& table,
                               std::uint64_t p_limit, unsigned threads) {
    const auto primes = primes_up_to(table, p_limit);
    if (!is_admissible(tuple)) {
        return SingularSeries{tuple, TruncatedConstant{0.0, p_limit, 0.0}, false};
    }

    std::vector<std::uint64_t> w(primes.size());
    const std::uint64_t chunks = (primes.size() + 255) / 256;
    detail::parallel_for(chunks, threads, [&](std::uint64_t c) {
        const std::size_t end = std::min<std::size_t>(primes.size(), (c + 1) * 256);
        for (std::size_t i = c * 256; i < end; ++i) {
            w[i] = residue_count(tuple, primes[i]);
        }
    });

    const double k = static_cast<double>(tuple.size());
    std::size_t next = 0;
    auto constant = detail::truncated_log_product(primes, p_limit, 1.0, [&](std::uint64_t p) {
        const std::uint64_t wp = w[next++];
        if (wp == p) {
            return -std::numeric_limits<double>::infinity();
        }
        const double pd = static_cast<double>(p);
        return std::log1p(-static_cast<double>(wp) / pd) - k * std::log1p(-1.0 / pd);
    });
    return SingularSeries{tuple, constant, true};
}

TruncatedConstant twin_constant_closed_form(const PrimeTable& table, std::uint64_t p_limit) {
    const auto primes = primes_up_to(table, p_limit);
    return detail::truncated_log_product(primes, p_limit, 2.0, [](std::uint64_t p) {
        if (p == 2) {
            return 0.0;
        }
        const double q = static_cast<double>(p - 1);
        return std::log1p(-1.0 / (q * q));
    });
}

Fraction conditional_factor(std::uint64_t p) {
    require_prime(p);
    if (p == 2) {
        return Fraction{1, 1};
    }
    return Fraction{static_cast<std::int64_t>(p - 2), static_cast<std::int64_t>(p - 1)};
}

double conditional_probability_estimate(const PrimeTable& table, std::uint64_t x) {
    const std::uint64_t root = isqrt(x);
    if (root > table.limit()) {
        throw RangeError("conditional estimate at x = " + std::to_string(x) +
                         " needs a sieve to " + std::to_string(root));
    }
    CompensatedSum log_sum;
    for (std::uint64_t p : primes_up_to(table, root)) {
        if (p > 2) {
            log_sum.add(std::log1p(-1.0 / static_cast<double>(p - 1)));
        }
    }
    return constants::half_e_gamma() * std::exp(log_sum.value());
}

double dependency_ratio_product(const PrimeTable& table, std::uint64_t x) {
    if (x < 4) {
        throw DomainError("dependency ratio product needs x >= 4, got " + std::to_string(x));
    }
    const std::uint64_t root = isqrt(x);
    if (root > table.limit()) {
        throw RangeError("dependency ratio product at x = " + std::to_string(x) +
                         " needs a sieve to " + std::to_string(root));
    }
    return twin_constant_closed_form(table, root).value;
}

std::uint64_t count_constellations_in(const PrimeTable& table, const OffsetTuple& tuple,
                                      std::uint64_t lo, std::uint64_t hi, unsigned threads) {
    if (hi > table.limit() || table.limit() - hi < tuple.max_offset()) {
        throw RangeError("constellation window up to " + std::to_string(hi) + " + " +
                         std::to_string(tuple.max_offset()) + " exceeds sieve limit " +
                         std::to_string(table.limit()));
    }
    if (hi < lo || hi < 2) {
        return 0;
    }
    std::uint64_t total = 0;
    // x = 2 is the only even candidate
    if (lo <= 2) {
        bool all_prime = true;
        for (std::uint64_t h : tuple.offsets()) {
            all_prime = all_prime && table.is_prime(2 + h);
        }
        total += all_prime ? 1 : 0;
    }
    const std::uint64_t first = std::max<std::uint64_t>(lo, 3) | 1;
    const std::uint64_t last = (hi & 1) ? hi : hi - 1;
    if (last < first) {
        return total;
    }
    const std::uint64_t first_index = first / 2;
    const std::uint64_t last_index = last / 2;
    const std::uint64_t first_word = first_index / 64;
    const std::uint64_t last_word = last_index / 64;
    const auto flags = table.odd_flags();
    const auto offsets = tuple.offsets();

    const std::uint64_t chunks = (last_word - first_word) / kWordsPerChunk + 1;
    std::vector<std::uint64_t> partial(chunks, 0);
    detail::parallel_for(chunks, threads, [&](std::uint64_t c) {
        const std::uint64_t begin = first_word + c * kWordsPerChunk;
        const std::uint64_t end = std::min(last_word + 1, begin + kWordsPerChunk);
        std::uint64_t count = 0;
        for (std::uint64_t w = begin; w < end; ++w) {
            std::uint64_t mask = flags[w];
            if (w == first_word) {
                mask &= ~std::uint64_t{0} << (first_index % 64);
            }
            if (w == last_word && last_index % 64 != 63) {
                mask &= (std::uint64_t{1} << (last_index % 64 + 1)) - 1;
            }
            for (std::size_t i = 1; i < offsets.size() && mask != 0; ++i) {
                mask &= flags_at(flags, w * 64 + offsets[i] / 2);
            }
            count += static_cast<std::uint64_t>(std::popcount(mask));
        }
        partial[c] = count;
    });
    for (std::uint64_t c : partial) {
        total += c;
    }
    return total;
}

std::uint64_t count_constellations(const PrimeTable& table, const OffsetTuple& tuple,
                                   std::uint64_t x_limit, unsigned threads) {
    return count_constellations_in(table, tuple, 0, x_limit, threads);
}

double empirical_conditional_ratio(const PrimeTable& table, std::uint64_t x, unsigned threads) {
    const std::uint64_t twins = count_constellations(table, OffsetTuple::twin(), x, threads);
    const std::uint64_t primes = prime_count(table, x);
    if (primes == 0) {
        throw DomainError("empirical conditional ratio needs pi(x) > 0");
    }
    const double pi = static_cast<double>(primes);
    return (static_cast<double>(twins) / pi) / (pi / static_cast<double>(x));
}

} // namespace primedens
