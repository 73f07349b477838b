#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supertask {

// Stable error codes. The CLI prints these names verbatim and maps the
// category to its exit code (usage 1, parse 2, domain 3).
enum class errc {
    // expression / file parsing
    syntax_error,
    number_too_large,
    coefficient_zero,
    exponent_depth_exceeded,
    duplicate_edge,
    missing_transition,
    unknown_state,
    empty_states,
    empty_start,
    duplicate_label,
    duplicate_directive,
    selected_not_start,
    unknown_directive,
    // domain rules
    no_finite_period,
    index_beyond_bound,
    outside_interval,
    epsilon_not_positive,
    bound_exceeded,
    // invariant violations (should not escape in normal use)
    internal,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

// Malformed input text: ordinal expressions, STS files. Carries the offset
// (expression parsing) or line number (file parsing) that triggered it.
class ParseError : public Error {
public:
    ParseError(errc code, const std::string& message, std::size_t position = 0)
        : Error(code, message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Well-formed input outside an operation's domain (limit runtime on the
// pi-parity machine, time outside the schedule interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Command-line misuse: flag combinations, unknown start labels.
class UsageError : public Error {
public:
    using Error::Error;
};

inline const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::syntax_error: return "SyntaxError";
        case errc::number_too_large: return "NumberTooLarge";
        case errc::coefficient_zero: return "CoefficientZero";
        case errc::exponent_depth_exceeded: return "ExponentDepthExceeded";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::missing_transition: return "MissingTransition";
        case errc::unknown_state: return "UnknownState";
        case errc::empty_states: return "EmptyStates";
        case errc::empty_start: return "EmptyStart";
        case errc::duplicate_label: return "DuplicateLabel";
        case errc::duplicate_directive: return "DuplicateDirective";
        case errc::selected_not_start: return "SelectedNotStart";
        case errc::unknown_directive: return "UnknownDirective";
        case errc::no_finite_period: return "NoFinitePeriod";
        case errc::index_beyond_bound: return "IndexBeyondBound";
        case errc::outside_interval: return "OutsideInterval";
        case errc::epsilon_not_positive: return "EpsilonNotPositive";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace supertask
