#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace primedens {

struct SieveOptions {
    // Odd numbers sieved per segment; rounded up to a multiple of 64.
    std::size_t segment_flags = std::size_t{1} << 20;
    unsigned threads = 1;
};

/// Primality of every integer in [2, limit], one bit per odd number.
///
/// Bit i of the flag array stands for 2*i + 1. The table is immutable once
/// built and all queries are const, so a single instance can be shared
/// across threads. Queries outside [2, limit] throw RangeError.
class PrimeTable {
public:
    // Largest supported limit. At 2^32 the flag array is 256 MiB.
    static constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 32;

    std::uint64_t limit() const noexcept { return limit_; }

    bool is_prime(std::uint64_t n) const;

    /// Raw odd-number flags; bits past the limit are zero.
    std::span<const std::uint64_t> odd_flags() const noexcept { return flags_; }

    /// Primes in [lo, hi] without a range check against the limit.
    std::uint64_t count_primes_in(std::uint64_t lo, std::uint64_t hi) const;

private:
    friend PrimeTable build_table(std::uint64_t limit, const SieveOptions& options);

    std::uint64_t odd_prefix_count(std::uint64_t n) const;

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> flags_;
    // cumulative popcount of flags_ before each word
    std::vector<std::uint32_t> word_prefix_;
};

/// Segmented sieve of Eratosthenes over [2, limit].
/// Throws ConfigError unless 2 <= limit <= PrimeTable::kMaxLimit.
PrimeTable build_table(std::uint64_t limit, const SieveOptions& options = {});

/// The primes <= y in increasing order. Throws RangeError if y > table.limit().
std::vector<std::uint64_t> primes_up_to(const PrimeTable& table, std::uint64_t y);

/// pi(x). Throws RangeError if x > table.limit().
std::uint64_t prime_count(const PrimeTable& table, std::uint64_t x);

/// Number of primes in [lo, hi]. Throws RangeError if hi > table.limit().
std::uint64_t prime_count_in(const PrimeTable& table, std::uint64_t lo, std::uint64_t hi);

} // namespace primedens
