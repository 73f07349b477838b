#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supertask {

/// A hereditarily finite set with extensional equality. Elements are kept
/// sorted and deduplicated under a fixed total order, so two sets are equal
/// iff their element sequences match. Subtrees are shared via shared_ptr;
/// sharing is invisible to equality.
class NestedSet {
public:
    using Ptr = std::shared_ptr<const NestedSet>;

    /// The empty set.
    NestedSet() = default;

    explicit NestedSet(std::vector<Ptr> elements);

    static Ptr make_empty();
    static Ptr make(std::vector<Ptr> elements);

    const std::vector<Ptr>& elements() const noexcept { return elements_; }
    std::size_t cardinality() const noexcept { return elements_.size(); }
    bool contains(const NestedSet& candidate) const;

    /// Total order used for canonical element storage (lexicographic over
    /// recursively ordered elements).
    static std::strong_ordering compare(const NestedSet& a, const NestedSet& b);

    friend bool operator==(const NestedSet& a, const NestedSet& b) {
        return compare(a, b) == std::strong_ordering::equal;
    }

    /// Braces notation, e.g. von Neumann 2 renders as "{{}, {{}}}".
    std::string to_string() const;

private:
    std::vector<Ptr> elements_;
};

/// The von Neumann ordinal n as a nested set, built by S(a) = a U {a} from
/// the empty set. Throws Error(bound_exceeded) past the bound; hereditary
/// structure is shared internally, so the default bound is conservative.
NestedSet von_neumann_set(unsigned n, unsigned bound = 16);

std::size_t cardinality(const NestedSet& value);

/// Witness that {0..n-1} splits into two disjoint equinumerous subsets, if
/// one exists: brute-force over bipartitions, n <= 20. An even n yields a
/// witness pair, an odd n yields nullopt.
std::optional<std::pair<std::vector<unsigned>, std::vector<unsigned>>> even_split_exists(
    unsigned n);

}  // namespace supertask
