#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace primedens {

/// Integer polynomial, constant term first, degree >= 1, positive leading coefficient.
///
/// Evaluation is exact: intermediate values are held in 128 bits and any
/// result outside the signed 64-bit range raises ArithmeticError. That is
/// the overflow ceiling, e.g. degree 2 is safe up to |x| ~ 3e9 for unit
/// coefficients and degree 8 up to |x| ~ 230.
class IntPolynomial {
public:
    static constexpr std::size_t kMaxDegree = 32;

    /// Trailing zero coefficients are dropped. Throws ConfigError for a
    /// constant polynomial, a non-positive leading coefficient or a degree
    /// above kMaxDegree.
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);

    std::span<const std::int64_t> coefficients() const noexcept { return coefficients_; }
    std::size_t degree() const noexcept { return coefficients_.size() - 1; }
    std::int64_t leading() const noexcept { return coefficients_.back(); }

    /// gcd of all coefficients.
    std::uint64_t content() const noexcept;

    /// Canonical form, e.g. "2x^3-5x+3".
    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<std::int64_t> coefficients_;
};

/// Parses "x^2+1", "2x^3-5x+3", "3*x - 7". Like terms are combined and
/// spaces are ignored. Throws ConfigError on anything else, including
/// non-integer coefficients.
IntPolynomial parse_polynomial(std::string_view text);

/// Exact g(x). Throws ArithmeticError when the value leaves int64.
std::int64_t poly_eval(const IntPolynomial& g, std::int64_t x);

/// g(x) mod m, for m >= 1.
std::uint64_t poly_eval_mod(const IntPolynomial& g, std::uint64_t x, std::uint64_t m);

enum class Irreducibility { irreducible, reducible, unverified };

/// Degree 1 is irreducible. Degrees 2 and 3 are reducible over Q exactly
/// when they have a rational root, which is searched for directly. Higher
/// degrees, and coefficients too large to screen, come back unverified.
Irreducibility screen_irreducibility(const IntPolynomial& g);

std::string_view to_string(Irreducibility value) noexcept;

} // namespace primedens
