#include "primedens/prime_table.hpp"

#include "primedens/errors.hpp"
#include "primedens/primality.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

namespace primedens {
namespace {

// Odd primes up to n by a plain sieve; used to seed the segments.
std::vector<std::uint32_t> small_odd_primes(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 3; i <= n; i += 2) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += 2 * i) {
            composite[j] = true;
        }
    }
    return primes;
}

// Clears the flags of odd composites whose index lies in [lo, hi).
// lo and hi are multiples of 64 so segments never share a word.
void sieve_segment(std::span<std::uint64_t> flags, std::uint64_t lo, std::uint64_t hi,
                   std::span<const std::uint32_t> base_primes) {
    std::fill(flags.begin() + static_cast<std::ptrdiff_t>(lo / 64),
              flags.begin() + static_cast<std::ptrdiff_t>((hi + 63) / 64), ~std::uint64_t{0});
    const std::uint64_t hi_value = 2 * hi - 1; // largest value in the segment
    for (std::uint64_t p : base_primes) {
        if (p * p > hi_value) {
            break;
        }
        // first odd multiple of p that is >= max(p*p, 2*lo+1)
        std::uint64_t start = std::max(p * p, 2 * lo + 1);
        std::uint64_t m = (start + p - 1) / p * p;
        if ((m & 1) == 0) {
            m += p;
        }
        for (std::uint64_t i = (m - 1) / 2; i < hi; i += p) {
            flags[i / 64] &= ~(std::uint64_t{1} << (i % 64));
        }
    }
}

} // namespace

PrimeTable build_table(std::uint64_t limit, const SieveOptions& options) {
    if (limit < 2 || limit > PrimeTable::kMaxLimit) {
        throw ConfigError("sieve limit " + std::to_string(limit) + " outside [2, " +
                          std::to_string(PrimeTable::kMaxLimit) + "]");
    }
    PrimeTable table;
    table.limit_ = limit;

    const std::uint64_t odd_count = (limit - 1) / 2 + 1; // indices 0..(limit-1)/2
    const std::uint64_t words = (odd_count + 63) / 64;
    table.flags_.assign(words, 0);

    const auto base_primes = small_odd_primes(isqrt(limit));
    const std::uint64_t segment =
        std::max<std::uint64_t>(64, (options.segment_flags + 63) / 64 * 64);
    const std::uint64_t segments = (odd_count + segment - 1) / segment;
    std::span<std::uint64_t> flags(table.flags_);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t s = next++; s < segments; s = next++) {
            const std::uint64_t lo = s * segment;
            const std::uint64_t hi = std::min(lo + segment, words * 64);
            sieve_segment(flags, lo, hi, base_primes);
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || segments == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::uint64_t>(threads, segments); ++t) {
            pool.emplace_back(worker);
        }
    }

    // 1 is not prime; the base primes themselves were never struck.
    table.flags_[0] &= ~std::uint64_t{1};
    const std::uint64_t tail = odd_count % 64;
    if (tail != 0) {
        table.flags_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    table.word_prefix_.resize(words + 1);
    std::uint32_t running = 0;
    for (std::uint64_t w = 0; w < words; ++w) {
        table.word_prefix_[w] = running;
        running += static_cast<std::uint32_t>(std::popcount(table.flags_[w]));
    }
    table.word_prefix_[words] = running;
    return table;
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n < 2 || n > limit_) {
        throw RangeError("primality query " + std::to_string(n) + " outside [2, " +
                         std::to_string(limit_) + "]");
    }
    if (n == 2) {
        return true;
    }
    if ((n & 1) == 0) {
        return false;
    }
    const std::uint64_t i = n / 2;
    return (flags_[i / 64] >> (i % 64)) & 1;
}

// Odd primes <= n, for n <= limit.
std::uint64_t PrimeTable::odd_prefix_count(std::uint64_t n) const {
    if (n < 3) {
        return 0;
    }
    const std::uint64_t last = (n - 1) / 2; // index of largest odd <= n
    const std::uint64_t w = last / 64;
    const std::uint64_t bits = last % 64 + 1;
    const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    return word_prefix_[w] + static_cast<std::uint64_t>(std::popcount(flags_[w] & mask));
}

std::uint64_t PrimeTable::count_primes_in(std::uint64_t lo, std::uint64_t hi) const {
    if (hi < lo || hi < 2) {
        return 0;
    }
    auto upto = [this](std::uint64_t n) -> std::uint64_t {
        return n < 2 ? 0 : 1 + odd_prefix_count(n);
    };
    return upto(hi) - (lo == 0 ? 0 : upto(lo - 1));
}

std::vector<std::uint64_t> primes_up_to(const PrimeTable& table, std::uint64_t y) {
    if (y > table.limit()) {
        throw RangeError("primes_up_to(" + std::to_string(y) + ") exceeds sieve limit " +
                         std::to_string(table.limit()));
    }
    std::vector<std::uint64_t> primes;
    if (y < 2) {
        return primes;
    }
    primes.reserve(table.count_primes_in(2, y));
    primes.push_back(2);
    const auto flags = table.odd_flags();
    const std::uint64_t last = (y - 1) / 2;
    for (std::uint64_t w = 0; w <= last / 64; ++w) {
        std::uint64_t bits = flags[w];
        while (bits != 0) {
            const std::uint64_t i = w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits));
            if (i > last) {
                break;
            }
            primes.push_back(2 * i + 1);
            bits &= bits - 1;
        }
    }
    return primes;
}

std::uint64_t prime_count(const PrimeTable& table, std::uint64_t x) {
    if (x > table.limit()) {
        throw RangeError("prime_count(" + std::to_string(x) + ") exceeds sieve limit " +
                         std::to_string(table.limit()));
    }
    return table.count_primes_in(2, x);
}

std::uint64_t prime_count_in(const PrimeTable& table, std::uint64_t lo, std::uint64_t hi) {
    if (hi > table.limit()) {
        throw RangeError("prime_count_in upper bound " + std::to_string(hi) +
                         " exceeds sieve limit " + std::to_string(table.limit()));
    }
    return table.count_primes_in(lo, hi);
}

} // namespace primedens
