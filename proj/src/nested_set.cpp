#include "supertask/nested_set.hpp"

#include <algorithm>

#include "supertask/error.hpp"

namespace supertask {

NestedSet::NestedSet(std::vector<Ptr> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const Ptr& a, const Ptr& b) { return compare(*a, *b) < 0; });
    elements_.erase(std::unique(elements_.begin(), elements_.end(),
                                [](const Ptr& a, const Ptr& b) { return *a == *b; }),
                    elements_.end());
}

NestedSet::Ptr NestedSet::make_empty() {
    return std::make_shared<const NestedSet>();
}

NestedSet::Ptr NestedSet::make(std::vector<Ptr> elements) {
    return std::make_shared<const NestedSet>(std::move(elements));
}

bool NestedSet::contains(const NestedSet& candidate) const {
    return std::any_of(elements_.begin(), elements_.end(),
                       [&](const Ptr& e) { return *e == candidate; });
}

std::strong_ordering NestedSet::compare(const NestedSet& a, const NestedSet& b) {
    if (&a == &b) {
        return std::strong_ordering::equal;
    }
    const std::size_t n = std::min(a.elements_.size(), b.elements_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.elements_[i] == b.elements_[i]) {
            continue;  // shared subtree
        }
        if (auto cmp = compare(*a.elements_[i], *b.elements_[i]); cmp != 0) {
            return cmp;
        }
    }
    return a.elements_.size() <=> b.elements_.size();
}

std::string NestedSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const Ptr& e : elements_) {
        if (!first) {
            out += ", ";
        }
        out += e->to_string();
        first = false;
    }
    out += "}";
    return out;
}

NestedSet von_neumann_set(unsigned n, unsigned bound) {
    if (n > bound) {
        throw DomainError(errc::bound_exceeded,
                          "von Neumann construction limited to n <= " + std::to_string(bound));
    }
    // ladder[k] is the ordinal k; the elements of k are ladder[0..k-1].
    std::vector<NestedSet::Ptr> ladder;
    ladder.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        ladder.push_back(NestedSet::make(std::vector<NestedSet::Ptr>(ladder)));
    }
    return *ladder.back();
}

std::size_t cardinality(const NestedSet& value) {
    return value.cardinality();
}

std::optional<std::pair<std::vector<unsigned>, std::vector<unsigned>>> even_split_exists(
    unsigned n) {
    if (n > 20) {
        throw DomainError(errc::bound_exceeded, "even_split_exists limited to n <= 20");
    }
    const std::uint32_t limit = static_cast<std::uint32_t>(1u) << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (2 * static_cast<unsigned>(std::popcount(mask)) != n) {
            continue;
        }
        std::vector<unsigned> left;
        std::vector<unsigned> right;
        for (unsigned i = 0; i < n; ++i) {
            ((mask >> i) & 1u ? left : right).push_back(i);
        }
        return std::make_pair(std::move(left), std::move(right));
    }
    return std::nullopt;
}

}  // namespace supertask
