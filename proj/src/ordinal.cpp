#include "supertask/ordinal.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "supertask/error.hpp"

namespace supertask {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (b > std::numeric_limits<std::uint64_t>::max() - a) {
        throw std::overflow_error("ordinal coefficient overflow in addition");
    }
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw std::overflow_error("ordinal coefficient overflow in multiplication");
    }
    return a * b;
}

}  // namespace

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {
    assert_canonical();
}

void Ordinal::assert_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coefficient == 0) {
            throw std::logic_error("ordinal term with zero coefficient");
        }
        if (i > 0 && !(terms_[i].exponent < terms_[i - 1].exponent)) {
            throw std::logic_error("ordinal exponents not strictly decreasing");
        }
    }
}

Ordinal Ordinal::nat(std::uint64_t n) {
    if (n == 0) {
        return Ordinal();
    }
    std::vector<Term> terms;
    terms.push_back(Term{Ordinal(), n});
    return Ordinal(std::move(terms));
}

Ordinal Ordinal::omega() {
    return omega_power(nat(1));
}

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
    if (coefficient == 0) {
        throw std::logic_error("omega_power requires coefficient >= 1");
    }
    if (exponent.is_zero()) {
        return nat(coefficient);
    }
    std::vector<Term> terms;
    terms.push_back(Term{exponent, coefficient});
    return Ordinal(std::move(terms));
}

bool Ordinal::is_finite() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

bool Ordinal::is_limit() const noexcept {
    return !terms_.empty() && !terms_.back().exponent.is_zero();
}

bool Ordinal::is_successor() const noexcept {
    return !terms_.empty() && terms_.back().exponent.is_zero();
}

std::uint64_t Ordinal::as_natural() const {
    if (!is_finite()) {
        throw std::domain_error("as_natural on a transfinite ordinal");
    }
    return terms_.empty() ? 0 : terms_.front().coefficient;
}

Ordinal Ordinal::successor() const {
    return *this + nat(1);
}

LimitDecomposition Ordinal::decompose() const {
    if (!is_successor()) {
        return LimitDecomposition{*this, 0};
    }
    std::vector<Term> head(terms_.begin(), terms_.end() - 1);
    return LimitDecomposition{Ordinal(std::move(head)), terms_.back().coefficient};
}

bool Ordinal::is_even() const {
    return decompose().finite_tail % 2 == 0;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    // Lexicographic on term sequences: the dominant term decides, a proper
    // prefix is smaller.
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto cmp = a.terms_[i].exponent <=> b.terms_[i].exponent; cmp != 0) {
            return cmp;
        }
        if (auto cmp = a.terms_[i].coefficient <=> b.terms_[i].coefficient; cmp != 0) {
            return cmp;
        }
    }
    return a.terms_.size() <=> b.terms_.size();
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) {
        return a;
    }
    if (a.is_zero()) {
        return b;
    }
    const Ordinal& lead = b.terms_.front().exponent;
    std::vector<Ordinal::Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    while (i < a.terms_.size() && lead < a.terms_[i].exponent) {
        out.push_back(a.terms_[i]);
        ++i;
    }
    // Terms of a below b's leading exponent are absorbed; an equal exponent
    // merges coefficients.
    std::uint64_t coefficient = b.terms_.front().coefficient;
    if (i < a.terms_.size() && a.terms_[i].exponent == lead) {
        coefficient = checked_add(a.terms_[i].coefficient, coefficient);
    }
    out.push_back(Ordinal::Term{lead, coefficient});
    out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
    return Ordinal(std::move(out));
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) {
        return Ordinal();
    }
    Ordinal result;
    for (const Ordinal::Term& t : b.terms_) {
        Ordinal partial;
        if (t.exponent.is_zero()) {
            // a * n scales the dominant coefficient and keeps the tail:
            // (w^e*c + r) * n = w^e*(c*n) + r.
            std::vector<Ordinal::Term> terms = a.terms_;
            terms.front().coefficient = checked_mul(terms.front().coefficient, t.coefficient);
            partial = Ordinal(std::move(terms));
        } else {
            // a * (w^e * c) = w^(lead(a) + e) * c; the tail of a is absorbed.
            partial = Ordinal::omega_power(a.terms_.front().exponent + t.exponent, t.coefficient);
        }
        result = result + partial;
    }
    return result;
}

namespace {

// Recursive-descent parser for the ordinal expression grammar:
//   expr  := term ("+" term)*
//   term  := "w" power? mult? | nat
//   power := "^" ( nat | "(" expr ")" )
//   mult  := "*" nat
// Whitespace is insignificant; "ω" (UTF-8) is an alias for "w".
class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view text) : text_(text) {}

    Ordinal parse() {
        Ordinal value = parse_expr(0);
        skip_ws();
        if (pos_ != text_.size()) {
            fail(errc::syntax_error, "unexpected input");
        }
        return value;
    }

private:
    static constexpr int kMaxExponentDepth = 64;

    Ordinal parse_expr(int depth) {
        Ordinal value = parse_term(depth);
        while (true) {
            skip_ws();
            if (!eat('+')) {
                break;
            }
            value = value + parse_term(depth);
        }
        return value;
    }

    Ordinal parse_term(int depth) {
        skip_ws();
        if (eat_omega()) {
            Ordinal exponent = Ordinal::nat(1);
            skip_ws();
            if (eat('^')) {
                exponent = parse_power_argument(depth);
            }
            std::uint64_t coefficient = 1;
            skip_ws();
            if (eat('*')) {
                skip_ws();
                const std::size_t at = pos_;
                coefficient = parse_nat();
                if (coefficient == 0) {
                    fail(errc::coefficient_zero, "coefficient must be >= 1", at);
                }
            }
            return Ordinal::omega_power(exponent, coefficient);
        }
        if (pos_ < text_.size() && is_digit(text_[pos_])) {
            return Ordinal::nat(parse_nat());
        }
        fail(errc::syntax_error, "expected 'w' or a natural number");
    }

    Ordinal parse_power_argument(int depth) {
        if (depth + 1 > kMaxExponentDepth) {
            fail(errc::exponent_depth_exceeded, "exponent nesting too deep");
        }
        skip_ws();
        if (eat('(')) {
            Ordinal exponent = parse_expr(depth + 1);
            skip_ws();
            if (!eat(')')) {
                fail(errc::syntax_error, "expected ')'");
            }
            return exponent;
        }
        if (pos_ < text_.size() && is_digit(text_[pos_])) {
            return Ordinal::nat(parse_nat());
        }
        fail(errc::syntax_error, "expected a natural number or '(' after '^'");
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
            fail(errc::syntax_error, "expected a natural number");
        }
        std::uint64_t value = 0;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                fail(errc::number_too_large, "natural number out of range");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_omega() {
        if (eat('w')) {
            return true;
        }
        // UTF-8 "ω" (0xCF 0x89)
        if (pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xCF &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x89) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(errc code, const std::string& message) { fail(code, message, pos_); }

    [[noreturn]] void fail(errc code, const std::string& message, std::size_t at) {
        throw ParseError(code, message + " at position " + std::to_string(at), at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void format_term(const Ordinal::Term& term, std::string& out) {
    if (term.exponent.is_zero()) {
        out += std::to_string(term.coefficient);
        return;
    }
    out += 'w';
    if (term.exponent != Ordinal::nat(1)) {
        out += '^';
        if (term.exponent.is_finite()) {
            out += std::to_string(term.exponent.as_natural());
        } else {
            out += '(';
            out += format(term.exponent);
            out += ')';
        }
    }
    if (term.coefficient != 1) {
        out += '*';
        out += std::to_string(term.coefficient);
    }
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
    return OrdinalParser(text).parse();
}

std::string format(const Ordinal& value) {
    if (value.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const Ordinal::Term& term : value.terms()) {
        if (!first) {
            out += '+';
        }
        format_term(term, out);
        first = false;
    }
    return out;
}

}  // namespace supertask
