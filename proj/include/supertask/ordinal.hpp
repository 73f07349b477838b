#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace supertask {

class Ordinal;

// Split of an ordinal into its limit part and finite remainder:
// limit_part + finite_tail recomposes the original, and finite_tail is 0
// exactly when the original is 0 or a limit ordinal.
struct LimitDecomposition;

/// An ordinal below epsilon-zero in Cantor normal form: a finite sum of
/// terms w^exponent * coefficient with strictly decreasing exponents and
/// coefficients >= 1. The empty sum is 0. Representation is canonical, so
/// structural equality is ordinal equality. Values are immutable.
class Ordinal {
public:
    struct Term {
        Ordinal exponent;
        std::uint64_t coefficient;
    };

    /// Zero.
    Ordinal() = default;

    static Ordinal nat(std::uint64_t n);
    static Ordinal omega();
    /// w^exponent * coefficient as a single canonical term (coefficient >= 1).
    static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const noexcept;
    bool is_limit() const noexcept;
    bool is_successor() const noexcept;

    /// Value of a finite ordinal; throws std::domain_error otherwise.
    std::uint64_t as_natural() const;

    Ordinal successor() const;
    LimitDecomposition decompose() const;

    /// Set-theoretic parity: the finite tail decides; limit parts are even
    /// (two interleaved copies of a limit ordinal have its order type).
    bool is_even() const;

    const std::vector<Term>& terms() const noexcept { return terms_; }

    friend bool operator==(const Ordinal& a, const Ordinal& b);
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

    /// Ordinal sum. Not commutative: 1 + w = w but w + 1 > w.
    friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
    /// Ordinal product. Left-distributes over addition in the right factor.
    friend Ordinal operator*(const Ordinal& a, const Ordinal& b);

private:
    explicit Ordinal(std::vector<Term> terms);
    void assert_canonical() const;

    std::vector<Term> terms_;
};

struct LimitDecomposition {
    Ordinal limit_part;
    std::uint64_t finite_tail = 0;
};

/// Parses an ordinal expression: sums of "w"-power terms and naturals,
/// e.g. "w", "w+1", "w*2", "w^2*3+w*2+5", "w^(w)". "ω" is accepted as an
/// alias for "w". Non-canonical input is normalized ("1+w" yields w).
/// Throws ParseError on malformed input.
Ordinal parse_ordinal(std::string_view text);

/// Canonical rendering; parse_ordinal(format(o)) == o. Zero formats as "0".
std::string format(const Ordinal& value);

}  // namespace supertask
