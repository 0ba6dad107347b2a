#include "primedens/polynomial.hpp"

#include "primedens/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

namespace primedens {
namespace {

using i128 = __int128;

constexpr i128 kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();

std::uint64_t magnitude(std::int64_t v) {
    return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

// Exact sum_i c_i * num^i * den^(h-i); nullopt on 128-bit overflow.
std::optional<i128> scaled_value(std::span<const std::int64_t> c, i128 num, i128 den) {
    const std::size_t h = c.size() - 1;
    i128 total = 0;
    for (std::size_t i = 0; i <= h; ++i) {
        i128 term = c[i];
        for (std::size_t j = 0; j < i; ++j) {
            if (__builtin_mul_overflow(term, num, &term)) {
                return std::nullopt;
            }
        }
        for (std::size_t j = i; j < h; ++j) {
            if (__builtin_mul_overflow(term, den, &term)) {
                return std::nullopt;
            }
        }
        if (__builtin_add_overflow(total, term, &total)) {
            return std::nullopt;
        }
    }
    return total;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small;
    std::vector<std::uint64_t> large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    IntPolynomial parse() {
        std::map<std::size_t, i128> terms;
        skip_spaces();
        if (at_end()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                advance();
                skip_spaces();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;

            std::optional<std::uint64_t> coefficient = digits();
            std::size_t power = 0;
            skip_spaces();
            if (!at_end() && peek() == '*') {
                if (!coefficient) {
                    fail("'*' without a coefficient");
                }
                advance();
                skip_spaces();
                if (at_end() || peek() != 'x') {
                    fail("expected 'x' after '*'");
                }
            }
            if (!at_end() && peek() == 'x') {
                advance();
                skip_spaces();
                power = 1;
                if (!at_end() && peek() == '^') {
                    advance();
                    skip_spaces();
                    const auto exponent = digits();
                    if (!exponent) {
                        fail("expected an exponent after '^'");
                    }
                    if (*exponent > IntPolynomial::kMaxDegree) {
                        fail("exponent above " + std::to_string(IntPolynomial::kMaxDegree));
                    }
                    power = static_cast<std::size_t>(*exponent);
                }
            } else if (!coefficient) {
                fail("expected a coefficient or 'x'");
            }
            skip_spaces();
            if (!at_end() && peek() != '+' && peek() != '-') {
                fail(std::string("unexpected '") + peek() + "'");
            }
            const i128 value = static_cast<i128>(coefficient.value_or(1));
            terms[power] += negative ? -value : value;
            if (terms[power] < kInt64Min || terms[power] > kInt64Max) {
                fail("coefficient out of 64-bit range");
            }
        }
        std::vector<std::int64_t> coefficients(terms.rbegin()->first + 1, 0);
        for (const auto& [power, value] : terms) {
            coefficients[power] = static_cast<std::int64_t>(value);
        }
        return IntPolynomial(std::move(coefficients));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }

    void skip_spaces() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
        }
    }

    std::optional<std::uint64_t> digits() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            return std::nullopt;
        }
        std::uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto digit = static_cast<std::uint64_t>(peek() - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                fail("coefficient out of 64-bit range");
            }
            value = value * 10 + digit;
            advance();
        }
        if (!at_end() && (peek() == '.' || peek() == '/' || peek() == 'e' || peek() == 'E')) {
            fail("coefficients must be integers");
        }
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
    if (coefficients_.size() < 2) {
        throw ConfigError("polynomial must have degree >= 1");
    }
    if (coefficients_.back() < 0) {
        throw ConfigError("leading coefficient must be positive");
    }
    if (degree() > kMaxDegree) {
        throw ConfigError("polynomial degree above " + std::to_string(kMaxDegree));
    }
}

std::uint64_t IntPolynomial::content() const noexcept {
    std::uint64_t g = 0;
    for (std::int64_t c : coefficients_) {
        g = std::gcd(g, magnitude(c));
    }
    return g;
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        const std::int64_t c = coefficients_[i];
        if (c == 0) {
            continue;
        }
        const std::uint64_t m = magnitude(c);
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (m != 1 || i == 0) {
            out += std::to_string(m);
        }
        if (i >= 1) {
            out += 'x';
        }
        if (i >= 2) {
            out += '^' + std::to_string(i);
        }
    }
    return out;
}

IntPolynomial parse_polynomial(std::string_view text) {
    return PolynomialParser(text).parse();
}

std::int64_t poly_eval(const IntPolynomial& g, std::int64_t x) {
    const auto c = g.coefficients();
    i128 acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (__builtin_mul_overflow(acc, static_cast<i128>(x), &acc) ||
            __builtin_add_overflow(acc, static_cast<i128>(c[i]), &acc)) {
            throw ArithmeticError("evaluating " + g.to_string() + " at " + std::to_string(x) +
                                  " overflows 128 bits");
        }
    }
    if (acc < kInt64Min || acc > kInt64Max) {
        throw ArithmeticError("value of " + g.to_string() + " at " + std::to_string(x) +
                              " exceeds the 64-bit ceiling");
    }
    return static_cast<std::int64_t>(acc);
}

std::uint64_t poly_eval_mod(const IntPolynomial& g, std::uint64_t x, std::uint64_t m) {
    using u128 = unsigned __int128;
    const auto c = g.coefficients();
    x %= m;
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        const std::uint64_t r = magnitude(c[i]) % m;
        const std::uint64_t ci = (c[i] < 0 && r != 0) ? m - r : r;
        acc = static_cast<std::uint64_t>((static_cast<u128>(acc) * x + ci) % m);
    }
    return acc;
}

Irreducibility screen_irreducibility(const IntPolynomial& g) {
    if (g.degree() == 1) {
        return Irreducibility::irreducible;
    }
    if (g.degree() > 3) {
        return Irreducibility::unverified;
    }
    const auto c = g.coefficients();
    if (c.front() == 0) {
        return Irreducibility::reducible; // x divides g
    }
    constexpr std::uint64_t kScreenCeiling = 1'000'000'000'000;
    const std::uint64_t constant = magnitude(c.front());
    const std::uint64_t leading = magnitude(c.back());
    if (constant > kScreenCeiling || leading > kScreenCeiling) {
        return Irreducibility::unverified;
    }
    // rational roots are +-d/e with d | constant and e | leading
    bool overflowed = false;
    for (std::uint64_t d : divisors(constant)) {
        for (std::uint64_t e : divisors(leading)) {
            if (std::gcd(d, e) != 1) {
                continue;
            }
            for (i128 num : {static_cast<i128>(d), -static_cast<i128>(d)}) {
                const auto value = scaled_value(c, num, static_cast<i128>(e));
                if (!value) {
                    overflowed = true;
                } else if (*value == 0) {
                    return Irreducibility::reducible;
                }
            }
        }
    }
    return overflowed ? Irreducibility::unverified : Irreducibility::irreducible;
}

std::string_view to_string(Irreducibility value) noexcept {
    switch (value) {
    case Irreducibility::irreducible:
        return "irreducible";
    case Irreducibility::reducible:
        return "reducible";
    case Irreducibility::unverified:
        return "unverified";
    }
    return "unverified";
}

} // namespace primedens
