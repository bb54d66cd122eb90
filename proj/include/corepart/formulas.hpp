#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "corepart/common.hpp"
#include "corepart/partition.hpp"

namespace corepart {

/// Number of (s, s+1)-core partitions with d-distinct parts:
/// N_d(s) = s for s <= d+1, then N_d(s) = N_d(s-1) + N_d(s-(d+1)).
inline std::int64_t count_ss1(int d, int s) {
    if (d < 1) throw std::invalid_argument("count_ss1: d must be >= 1");
    if (s < 1) throw std::invalid_argument("count_ss1: s must be >= 1");
    if (s <= d + 1) return s;
    std::vector<std::int64_t> n(static_cast<std::size_t>(s) + 1, 0);
    for (int i = 1; i <= d + 1; ++i) n[static_cast<std::size_t>(i)] = i;
    for (int i = d + 2; i <= s; ++i)
        n[static_cast<std::size_t>(i)] =
            checked_add(n[static_cast<std::size_t>(i - 1)], n[static_cast<std::size_t>(i - (d + 1))]);
    return n[static_cast<std::size_t>(s)];
}

/**
 * Largest size among (s, s+1)-core partitions with d-distinct parts.
 *
 * The closed form is floor of C(s+1,2)/(d+2) + s(d-1)/(2(d+2)), bumped by 1
 * before flooring when s mod (d+2) is outside {0,1,2}. Over a common
 * denominator the bracket collapses to s(s+d) / (2(d+2)), so flooring the
 * exact rational is one integer division — no floating point anywhere.
 */
inline std::int64_t largest_size_ss1(int d, int s) {
    if (d < 1) throw std::invalid_argument("largest_size_ss1: d must be >= 1");
    if (s < 1) throw std::invalid_argument("largest_size_ss1: s must be >= 1");
    const std::int64_t num = checked_mul(s, static_cast<std::int64_t>(s) + d);
    const std::int64_t den = 2 * (static_cast<std::int64_t>(d) + 2);
    const int rem = s % (d + 2);
    const std::int64_t bump = (rem <= 2) ? 0 : den;
    return checked_add(num, bump) / den;
}

/// How many (s, s+1)-core d-distinct partitions attain the largest size:
/// two exactly when s == 1 (mod d+2), except the degenerate s = 1 where the
/// empty partition is the unique (and largest) one.
inline std::int64_t num_largest_ss1(int d, int s) {
    if (d < 1) throw std::invalid_argument("num_largest_ss1: d must be >= 1");
    if (s < 1) throw std::invalid_argument("num_largest_ss1: s must be >= 1");
    if (s == 1) return 1;
    return s % (d + 2) == 1 ? 2 : 1;
}

/**
 * The explicit maximum-size partitions: beta set {s-1, s-(d+2), s-(2d+3), ...}
 * with x_i = s - ((i-1)d + i), i.e. consecutive gaps of d+1. The number of
 * terms k depends on s = (d+2)n + rem: k = n when rem = 0, k in {n, n+1}
 * when rem = 1 (two maximizers), and k = n+1 otherwise.
 */
inline std::vector<Partition> maximal_partitions_ss1(int d, int s) {
    if (d < 1) throw std::invalid_argument("maximal_partitions_ss1: d must be >= 1");
    if (s < 1) throw std::invalid_argument("maximal_partitions_ss1: s must be >= 1");
    if (s == 1) return {Partition{}};
    const int n = s / (d + 2);
    const int rem = s % (d + 2);
    auto build = [&](int k) {
        std::vector<int> els;
        els.reserve(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) els.push_back(s - ((i - 1) * d + i));
        return partition_from_beta_set(BetaSet(std::move(els)));
    };
    std::vector<Partition> out;
    if (rem == 0)
        out = {build(n)};
    else if (rem == 1)
        out = {build(n), build(n + 1)};
    else
        out = {build(n + 1)};
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

/// Conjectured count of (s, s+r)-core partitions with d-distinct parts for
/// 1 <= r <= d: starts s, ..., d, then d+r at s = d+1, then the same
/// recurrence as count_ss1. CONJECTURAL for r >= 2 — verified evidence only.
inline std::int64_t conjectured_count(int d, int r, int s) {
    if (d < 1) throw std::invalid_argument("conjectured_count: d must be >= 1");
    if (r < 1 || r > d) throw std::invalid_argument("conjectured_count: requires 1 <= r <= d");
    if (s < 1) throw std::invalid_argument("conjectured_count: s must be >= 1");
    if (s <= d) return s;
    std::vector<std::int64_t> n(static_cast<std::size_t>(std::max(s, d + 1)) + 1, 0);
    for (int i = 1; i <= d; ++i) n[static_cast<std::size_t>(i)] = i;
    n[static_cast<std::size_t>(d) + 1] = d + r;
    for (int i = d + 2; i <= s; ++i)
        n[static_cast<std::size_t>(i)] =
            checked_add(n[static_cast<std::size_t>(i - 1)], n[static_cast<std::size_t>(i - (d + 1))]);
    return n[static_cast<std::size_t>(s)];
}

/// Count of (s, ds-1)-core partitions with distinct parts:
/// N_d(1) = 1, N_d(2) = d, N_d(s) = N_d(s-1) + d * N_d(s-2).
inline std::int64_t straub_count(int d, int s) {
    if (d < 1) throw std::invalid_argument("straub_count: d must be >= 1");
    if (s < 1) throw std::invalid_argument("straub_count: s must be >= 1");
    if (s == 1) return 1;
    std::int64_t prev = 1, cur = d;
    for (int i = 3; i <= s; ++i) {
        const std::int64_t next = checked_add(cur, checked_mul(d, prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Count of partitions avoiding hooks a and b for coprime a, b:
/// C(a+b, a) / (a+b), always an exact division.
inline std::int64_t anderson_count(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("anderson_count: values must be >= 1");
    if (gcd64(a, b) != 1)
        throw UnboundedQueryError("anderson_count: " + std::to_string(a) + " and " + std::to_string(b) +
                                  " are not coprime, so the family is infinite");
    const std::int64_t binom = binomial(static_cast<std::int64_t>(a) + b, a);
    if (binom % (a + b) != 0) throw std::logic_error("anderson_count: division not exact");
    return binom / (a + b);
}

/// Catalan number C_s = C(2s, s) / (s+1), the count of all (s, s+1)-cores.
inline std::int64_t catalan(int s) {
    if (s < 0) throw std::invalid_argument("catalan: s must be nonnegative");
    const std::int64_t binom = binomial(2 * static_cast<std::int64_t>(s), s);
    return binom / (s + 1);
}

/// A labeled count sequence, one value per s starting at s = 1.
struct CountSequence {
    std::string family; // ss1 | conjecture | straub | anderson | catalan
    std::map<std::string, int> params;
    bool conjectural = false;
    int first_index = 1;
    std::vector<std::int64_t> values;
};

inline CountSequence count_sequence_ss1(int d, int s_max) {
    CountSequence seq{"ss1", {{"d", d}}, false, 1, {}};
    for (int s = 1; s <= s_max; ++s) seq.values.push_back(count_ss1(d, s));
    return seq;
}

inline CountSequence count_sequence_conjecture(int d, int r, int s_max) {
    CountSequence seq{"conjecture", {{"d", d}, {"r", r}}, true, 1, {}};
    for (int s = 1; s <= s_max; ++s) seq.values.push_back(conjectured_count(d, r, s));
    return seq;
}

inline CountSequence count_sequence_straub(int d, int s_max) {
    CountSequence seq{"straub", {{"d", d}}, false, 1, {}};
    for (int s = 1; s <= s_max; ++s) seq.values.push_back(straub_count(d, s));
    return seq;
}

inline CountSequence count_sequence_catalan(int s_max) {
    CountSequence seq{"catalan", {}, false, 1, {}};
    for (int s = 1; s <= s_max; ++s) seq.values.push_back(catalan(s));
    return seq;
}

inline CountSequence count_sequence_anderson(int a, int b) {
    return CountSequence{"anderson", {{"a", a}, {"b", b}}, false, 1, {anderson_count(a, b)}};
}

} // namespace corepart
