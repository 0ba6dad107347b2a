#pragma once

// Independent reference implementations used only by the tests. None of
// them share code paths with the library.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 2; m <= n; ++m) {
        if (is_prime(m)) {
            out.push_back(m);
        }
    }
    return out;
}

// #{x mod p : prod_i (x + h_i) = 0 mod p}, evaluating the product for every x.
inline std::uint64_t residue_count(const std::vector<std::uint64_t>& offsets, std::uint64_t p) {
    std::uint64_t hits = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t product = 1;
        for (std::uint64_t h : offsets) {
            product = product * ((x + h) % p) % p;
        }
        hits += product == 0;
    }
    return hits;
}

// g(x) mod p by naive power sums.
inline std::int64_t eval_mod(const std::vector<std::int64_t>& c, std::int64_t x, std::int64_t p) {
    std::int64_t total = 0;
    std::int64_t power = 1;
    for (std::int64_t coefficient : c) {
        total = (total + (coefficient % p + p) % p * power) % p;
        power = power * (x % p) % p;
    }
    return total;
}

inline std::uint64_t root_count(const std::vector<std::vector<std::int64_t>>& family, std::int64_t p) {
    std::uint64_t hits = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t product = 1;
        for (const auto& g : family) {
            product = product * eval_mod(g, x, p) % p;
        }
        hits += product == 0;
    }
    return hits;
}

// li(x) = gamma + ln ln x + sum_{n>=1} (ln x)^n / (n * n!)
inline long double li(long double x) {
    const long double gamma = 0.577215664901532860606512090082402431L;
    const long double L = std::log(x);
    long double term = 1.0L; // L^n / n!
    long double sum = 0.0L;
    for (int n = 1; n < 400; ++n) {
        term *= L / n;
        const long double add = term / n;
        sum += add;
        if (add < 1e-22L * sum) {
            break;
        }
    }
    return gamma + std::log(L) + sum;
}

// integral_2^x dt / ln^k t via integration by parts down to li.
inline long double integral_inverse_log_power(int k, long double x) {
    if (k == 1) {
        return li(x) - li(2.0L);
    }
    const long double km1 = k - 1;
    auto boundary = [&](long double t) { return -t / (km1 * std::pow(std::log(t), km1)); };
    return boundary(x) - boundary(2.0L) + integral_inverse_log_power(k - 1, x) / km1;
}

} // namespace oracle
