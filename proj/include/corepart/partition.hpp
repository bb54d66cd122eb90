#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "corepart/common.hpp"

namespace corepart {

/**
 * An integer partition: a finite nonincreasing sequence of positive parts.
 * The empty partition (the unique partition of 0) is valid and shows up
 * everywhere, e.g. as the unique (1,t)-core.
 *
 * Rows and columns of the Young diagram are 1-based throughout.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Number of parts (rows of the Young diagram).
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based row length; part(1) is the largest part.
    int part(int i) const {
        if (i < 1 || i > length()) throw std::out_of_range("Partition::part: row " + std::to_string(i));
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    /// Sum of all parts.
    std::int64_t size() const {
        std::int64_t n = 0;
        for (int p : parts_) n = checked_add(n, p);
        return n;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::invalid_argument("Partition: parts must be nonincreasing");
        }
    }

    std::vector<int> parts_;
};

/**
 * The beta set of a partition: its first-column hook lengths, kept in the
 * canonical strictly decreasing order. Any finite set of distinct positive
 * integers is a valid beta set; the map to partitions is a bijection.
 */
class BetaSet {
public:
    BetaSet() = default;

    explicit BetaSet(std::vector<int> elements) : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end(), std::greater<>());
        validate();
    }

    BetaSet(std::initializer_list<int> elements) : BetaSet(std::vector<int>(elements)) {}

    /// Strictly decreasing.
    const std::vector<int>& elements() const noexcept { return elements_; }

    int count() const noexcept { return static_cast<int>(elements_.size()); }

    bool empty() const noexcept { return elements_.empty(); }

    bool contains(int x) const {
        return std::binary_search(elements_.begin(), elements_.end(), x, std::greater<>());
    }

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    void validate() const {
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i] < 1)
                throw std::invalid_argument("BetaSet: elements must be positive");
            if (i > 0 && elements_[i - 1] == elements_[i])
                throw std::invalid_argument("BetaSet: elements must be distinct");
        }
    }

    std::vector<int> elements_;
};

/// The set of forbidden hook lengths {s1,...,st}; nonempty, values >= 1.
class CoreSpec {
public:
    explicit CoreSpec(std::vector<int> forbidden) : values_(std::move(forbidden)) {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
        if (values_.empty())
            throw std::invalid_argument("CoreSpec: at least one forbidden hook length required");
        if (values_.front() < 1)
            throw std::invalid_argument("CoreSpec: forbidden hook lengths must be positive");
    }

    CoreSpec(std::initializer_list<int> forbidden) : CoreSpec(std::vector<int>(forbidden)) {}

    /// Ascending, distinct.
    const std::vector<int>& values() const noexcept { return values_; }

    bool contains(int h) const { return std::binary_search(values_.begin(), values_.end(), h); }

    int max_value() const { return values_.back(); }

    friend bool operator==(const CoreSpec&, const CoreSpec&) = default;

private:
    std::vector<int> values_;
};

/**
 * Hook length of box (i, j), by the column-count formula:
 * h(i,j) = lambda_i - j + |{k : lambda_k >= j}| - i + 1.
 */
inline int hook_length(const Partition& p, int i, int j) {
    if (i < 1 || i > p.length() || j < 1 || j > p.part(i))
        throw std::out_of_range("hook_length: box (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is outside the diagram");
    int col = 0;
    for (int v : p.parts())
        if (v >= j) ++col;
    return p.part(i) - j + col - i + 1;
}

/**
 * Hook length of box (i, j) by literally counting boxes: those strictly to
 * the right in row i, those strictly below in column j, and the box itself.
 * Kept as an independent route for cross-checking hook_length.
 */
inline int hook_length_counted(const Partition& p, int i, int j) {
    if (i < 1 || i > p.length() || j < 1 || j > p.part(i))
        throw std::out_of_range("hook_length_counted: box (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is outside the diagram");
    int boxes = 1;
    for (int jj = j + 1; jj <= p.part(i); ++jj) ++boxes;
    for (int ii = i + 1; ii <= p.length(); ++ii)
        if (p.part(ii) >= j) ++boxes;
    return boxes;
}

/// First-column hook lengths: element i equals lambda_i + l - i.
inline BetaSet beta_set(const Partition& p) {
    const int l = p.length();
    std::vector<int> els;
    els.reserve(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) els.push_back(p.part(i) + l - i);
    return BetaSet(std::move(els));
}

/// Inverse of beta_set: with x1 > ... > xl, row i is x_i - l + i.
inline Partition partition_from_beta_set(const BetaSet& x) {
    const auto& e = x.elements();
    const int l = x.count();
    std::vector<int> parts;
    parts.reserve(e.size());
    for (int i = 1; i <= l; ++i) parts.push_back(e[static_cast<std::size_t>(i - 1)] - l + i);
    return Partition(std::move(parts));
}

/// |lambda| = sum of beta elements - C(l, 2).
inline std::int64_t size_from_beta_set(const BetaSet& x) {
    std::int64_t sum = 0;
    for (int e : x.elements()) sum = checked_add(sum, e);
    return checked_sub(sum, binomial(x.count(), 2));
}

/// Adjacent parts differ by at least d. Vacuous for length <= 1 and d = 0.
inline bool is_d_distinct(const Partition& p, int d) {
    if (d < 0) throw std::invalid_argument("is_d_distinct: d must be nonnegative");
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] - parts[i] < d) return false;
    return true;
}

/// d-th order twin-free: no two distinct elements differ by d or less.
inline bool is_twin_free(const BetaSet& x, int d) {
    if (d < 1) throw std::invalid_argument("is_twin_free: d must be >= 1");
    const auto& e = x.elements();
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i - 1] - e[i] <= d) return false;
    return true;
}

/**
 * Ground-truth core test: walk every box of the Young diagram, count its
 * hook literally (arm + leg + 1), and reject on any forbidden length.
 */
inline bool is_core(const Partition& p, const CoreSpec& spec) {
    const auto& parts = p.parts();
    const int l = p.length();
    for (int i = 1; i <= l; ++i) {
        const int row = parts[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= row; ++j) {
            int leg = 0;
            for (int k = i + 1; k <= l; ++k)
                if (parts[static_cast<std::size_t>(k - 1)] >= j) ++leg;
            if (spec.contains(row - j + leg + 1)) return false;
        }
    }
    return true;
}

/**
 * Beta-set core test for a single s: every x in the set with x >= s must
 * have x - s in the set. Since 0 is never a beta element, x = s itself can
 * never satisfy this, which is exactly right: s in beta(lambda) witnesses a
 * first-column hook of length s.
 */
inline bool is_core_via_beta(const BetaSet& x, int s) {
    if (s < 1) throw std::invalid_argument("is_core_via_beta: s must be >= 1");
    for (int e : x.elements()) {
        if (e < s) break; // decreasing order: nothing below can reach s
        if (!x.contains(e - s)) return false;
    }
    return true;
}

/// Canonical output order: size ascending, then lexicographically
/// descending on parts, so {4} precedes {3,1}.
inline bool canonical_less(const Partition& a, const Partition& b) {
    const auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return b.parts() < a.parts();
}

/// Brace display, e.g. "{4, 2}"; the empty partition prints "{ }".
inline std::string to_brace_string(const Partition& p) {
    if (p.empty()) return "{ }";
    std::ostringstream out;
    out << '{';
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) out << ", ";
        out << p.part(i);
    }
    out << '}';
    return out.str();
}

} // namespace corepart
