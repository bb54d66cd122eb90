#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corepart/common.hpp"
#include "corepart/partition.hpp"

namespace corepart {

enum class Engine { Beta, Brute, Both };

inline std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Beta: return "beta";
        case Engine::Brute: return "brute";
        case Engine::Both: return "both";
    }
    throw std::logic_error("engine_name: bad enum value");
}

inline Engine engine_from_name(const std::string& name) {
    if (name == "beta") return Engine::Beta;
    if (name == "brute") return Engine::Brute;
    if (name == "both") return Engine::Both;
    throw std::invalid_argument("unknown engine '" + name + "' (expected beta, brute, or both)");
}

struct EnumerationQuery {
    CoreSpec spec;
    int d = 1;                 // minimum gap between adjacent parts; 0 = unconstrained
    std::optional<int> bound;  // explicit cap on beta elements, overrides derivation
    Engine engine = Engine::Both;
};

/// How the search bound was obtained; explicit overrides mark the result as a
/// bounded enumeration (possibly a strict subset of an infinite family).
struct BoundInfo {
    int value = 0;
    std::string reason;
    bool explicit_override = false;
};

struct EnumerationResult {
    EnumerationQuery query;
    BoundInfo bound;
    std::string engine;               // engine that produced the list
    std::vector<Partition> partitions; // canonical order: size asc, then lex desc
    std::int64_t count = 0;
    std::int64_t max_size = 0;
    std::vector<Partition> argmax;     // partitions attaining max_size
    std::map<std::int64_t, std::int64_t> histogram; // size -> count
};

/**
 * Derive the tightest justified cap on beta-set elements for this query.
 *
 * Three derivation rules, each sound independently; the minimum wins:
 *  - forbidden hook 1: only the empty partition qualifies, bound 0;
 *  - two forbidden values a < b with b - a <= d: any element x >= b would put
 *    both x-a and x-b (or 0) in the set, two values at distance b-a, which a
 *    gap-d set cannot hold; bound b - 1;
 *  - coprime forbidden values a, b: elements above the Frobenius number
 *    ab-a-b are sums of a's and b's, and peeling them off walks the set down
 *    to 0; bound ab-a-b.
 *
 * Throws UnboundedQueryError when no rule applies (the family is then
 * genuinely infinite, e.g. all {4,6}-avoiding partitions).
 */
inline BoundInfo derive_beta_bound(const CoreSpec& spec, int d) {
    if (d < 0) throw std::invalid_argument("derive_beta_bound: d must be nonnegative");
    std::optional<BoundInfo> best;
    auto propose = [&](std::int64_t value, std::string reason) {
        if (value < 0) value = 0;
        if (!best || value < best->value)
            best = BoundInfo{static_cast<int>(value), std::move(reason), false};
    };
    const auto& v = spec.values();
    if (v.front() == 1)
        propose(0, "forbidden hook 1 admits only the empty partition");
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const std::int64_t a = v[i], b = v[j];
            if (d >= 1 && b - a <= d)
                propose(b - 1, "forbidden values " + std::to_string(a) + " and " + std::to_string(b) +
                                   " differ by at most d=" + std::to_string(d));
            if (gcd64(a, b) == 1)
                propose(checked_sub(checked_mul(a, b), a + b),
                        "Frobenius bound for coprime forbidden values " + std::to_string(a) + " and " +
                            std::to_string(b));
        }
    }
    if (!best) {
        std::ostringstream msg;
        msg << "no finite search bound derivable for forbidden hooks {";
        for (std::size_t i = 0; i < v.size(); ++i) msg << (i ? "," : "") << v[i];
        msg << "} with d=" << d << "; the family may be infinite (supply an explicit bound to enumerate a slice)";
        throw UnboundedQueryError(msg.str());
    }
    return *best;
}

namespace detail {

/**
 * Bitmask subset scan over {1..B}, feasible for B <= 30. Bit x of a mask
 * means the beta element x; bit 0 stays clear, so a shifted-out "x - s = 0"
 * lands on a bit that is never present and correctly kills the candidate.
 */
inline std::vector<Partition> search_beta_bitmask(const CoreSpec& spec, int d, int B) {
    std::uint64_t universe = 0;
    for (int x = 1; x <= B; ++x) universe |= std::uint64_t{1} << x;
    std::vector<int> active; // forbidden values small enough to constrain anything
    for (int s : spec.values())
        if (s <= B) {
            universe &= ~(std::uint64_t{1} << s); // s itself is a first-column hook
            active.push_back(s);
        }
    const int max_gap = std::min(d, B);
    std::vector<Partition> out;
    std::uint64_t m = universe;
    while (true) {
        bool ok = true;
        for (int k = 1; k <= max_gap && ok; ++k)
            if (m & (m >> k)) ok = false; // two elements at distance k <= d
        for (std::size_t a = 0; a < active.size() && ok; ++a)
            if ((m >> active[a]) & ~m) ok = false; // some x >= s lacks x - s
        if (ok) {
            std::vector<int> els;
            for (int x = B; x >= 1; --x)
                if (m & (std::uint64_t{1} << x)) els.push_back(x);
            out.push_back(partition_from_beta_set(BetaSet(std::move(els))));
        }
        if (m == 0) break;
        m = (m - 1) & universe;
    }
    return out;
}

/**
 * Backtracking search for B > 30: elements are decided in descending order,
 * demand[x] counts how many chosen elements require x (as some e - s) to be
 * present, and the gap constraint only needs checking against the smallest
 * element chosen so far.
 */
inline std::vector<Partition> search_beta_backtrack(const CoreSpec& spec, int d, int B) {
    std::vector<int> demand(static_cast<std::size_t>(B) + 1, 0);
    std::vector<char> is_forbidden(static_cast<std::size_t>(B) + 1, 0);
    for (int s : spec.values())
        if (s <= B) is_forbidden[static_cast<std::size_t>(s)] = 1;
    std::vector<int> chosen; // descending
    std::vector<Partition> out;

    auto rec = [&](auto&& self, int e) -> void {
        if (e == 0) { // demands always target values >= 1, so none can be pending here
            out.push_back(partition_from_beta_set(BetaSet(chosen)));
            return;
        }
        const bool must_take = demand[static_cast<std::size_t>(e)] > 0;
        bool can_take = !is_forbidden[static_cast<std::size_t>(e)];
        if (can_take && d >= 1 && !chosen.empty() && chosen.back() - e <= d) can_take = false;
        if (can_take) {
            for (int s : spec.values()) {
                if (s >= e) break;
                ++demand[static_cast<std::size_t>(e - s)];
            }
            chosen.push_back(e);
            self(self, e - 1);
            chosen.pop_back();
            for (int s : spec.values()) {
                if (s >= e) break;
                --demand[static_cast<std::size_t>(e - s)];
            }
        }
        if (!must_take) self(self, e - 1);
    };
    rec(rec, B);
    return out;
}

inline std::vector<Partition> beta_engine(const CoreSpec& spec, int d, int B) {
    return B <= 30 ? search_beta_bitmask(spec, d, B) : search_beta_backtrack(spec, d, B);
}

/**
 * Brute-force engine and independent oracle: builds partitions row by row
 * from the bottom of the diagram upward, so the hooks of rows already placed
 * never change, and checks every hook of each new row by literally counting
 * arm + leg + 1. No beta-set reasoning anywhere.
 *
 * Placing part p on top of k existing rows fixes its first-column hook at
 * p + k, so the cap "largest first-column hook <= B" becomes p <= B - k.
 */
inline std::vector<Partition> brute_engine(const CoreSpec& spec, int d, int B) {
    std::vector<char> is_forbidden(static_cast<std::size_t>(B) + 1, 0);
    for (int s : spec.values())
        if (s <= B) is_forbidden[static_cast<std::size_t>(s)] = 1;
    std::vector<int> rows;                                   // bottom row first
    std::vector<int> col_count(static_cast<std::size_t>(B) + 2, 0); // rows with part >= j
    std::vector<Partition> out;

    auto rec = [&](auto&& self) -> void {
        out.emplace_back(std::vector<int>(rows.rbegin(), rows.rend()));
        const int k = static_cast<int>(rows.size());
        const int lo = rows.empty() ? 1 : rows.back() + d;
        const int hi = B - k;
        for (int p = lo; p <= hi; ++p) {
            bool ok = true;
            for (int j = 1; j <= p && ok; ++j) {
                const int hook = (p - j) + col_count[static_cast<std::size_t>(j)] + 1; // arm + leg + box
                if (is_forbidden[static_cast<std::size_t>(hook)]) ok = false;
            }
            if (!ok) continue;
            rows.push_back(p);
            for (int j = 1; j <= p; ++j) ++col_count[static_cast<std::size_t>(j)];
            self(self);
            for (int j = 1; j <= p; ++j) --col_count[static_cast<std::size_t>(j)];
            rows.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline EnumerationResult assemble(EnumerationQuery query, BoundInfo bound, std::string engine,
                                  std::vector<Partition> partitions) {
    std::sort(partitions.begin(), partitions.end(), canonical_less);
    EnumerationResult r{std::move(query), std::move(bound), std::move(engine), {}, 0, 0, {}, {}};
    r.count = static_cast<std::int64_t>(partitions.size());
    r.max_size = partitions.empty() ? 0 : partitions.back().size();
    for (const auto& p : partitions) ++r.histogram[p.size()];
    for (auto it = partitions.rbegin(); it != partitions.rend() && it->size() == r.max_size; ++it)
        r.argmax.push_back(*it);
    std::reverse(r.argmax.begin(), r.argmax.end());
    r.partitions = std::move(partitions);
    return r;
}

} // namespace detail

/// Run a query through the requested engine(s). With Engine::Both the two
/// engines must return identical partition sets; disagreement is a hard
/// internal failure, never a data condition.
inline EnumerationResult run_query(const EnumerationQuery& q) {
    if (q.d < 0) throw std::invalid_argument("run_query: d must be nonnegative");
    BoundInfo bound;
    if (q.bound) {
        if (*q.bound < 0) throw std::invalid_argument("run_query: explicit bound must be nonnegative");
        bound = BoundInfo{*q.bound, "explicit bound supplied by caller", true};
    } else {
        bound = derive_beta_bound(q.spec, q.d);
    }
    switch (q.engine) {
        case Engine::Beta:
            return detail::assemble(q, bound, "beta", detail::beta_engine(q.spec, q.d, bound.value));
        case Engine::Brute:
            return detail::assemble(q, bound, "brute", detail::brute_engine(q.spec, q.d, bound.value));
        case Engine::Both: break;
    }
    auto beta = detail::beta_engine(q.spec, q.d, bound.value);
    auto brute = detail::brute_engine(q.spec, q.d, bound.value);
    std::sort(beta.begin(), beta.end(), canonical_less);
    std::sort(brute.begin(), brute.end(), canonical_less);
    if (beta != brute) {
        std::ostringstream msg;
        msg << "engine disagreement: beta found " << beta.size() << " partitions, brute force found "
            << brute.size();
        const std::size_t n = std::min(beta.size(), brute.size());
        for (std::size_t i = 0; i < n; ++i)
            if (beta[i] != brute[i]) {
                msg << "; first difference at position " << i << ": beta " << to_brace_string(beta[i])
                    << " vs brute " << to_brace_string(brute[i]);
                break;
            }
        throw EngineMismatchError(msg.str());
    }
    return detail::assemble(q, bound, "both", std::move(beta));
}

/// (s, s+1)-core partitions with d-distinct parts (d >= 1). The beta sets
/// are exactly the gap-d subsets of {1,...,s-1}.
inline EnumerationResult enumerate_ss1(int s, int d, Engine engine = Engine::Beta) {
    if (s < 1) throw std::invalid_argument("enumerate_ss1: s must be >= 1");
    if (d < 1) throw std::invalid_argument("enumerate_ss1: d must be >= 1 (use enumerate_general for d = 0)");
    return run_query(EnumerationQuery{CoreSpec{s, s + 1}, d, std::nullopt, engine});
}

/// (s, s+r)-core partitions with d-distinct parts in the regime 1 <= r <= d,
/// where beta elements are capped by s + r - 1.
inline EnumerationResult enumerate_s_splusr(int s, int r, int d, Engine engine = Engine::Beta) {
    if (s < 1) throw std::invalid_argument("enumerate_s_splusr: s must be >= 1");
    if (r < 1) throw std::invalid_argument("enumerate_s_splusr: r must be >= 1");
    if (r > d)
        throw std::invalid_argument("enumerate_s_splusr: requires r <= d (no finite bound otherwise); "
                                    "route r > d queries through enumerate_general");
    return run_query(EnumerationQuery{CoreSpec{s, s + r}, d, std::nullopt, engine});
}

/// Arbitrary forbidden-hook sets; bound derived unless supplied.
inline EnumerationResult enumerate_general(const CoreSpec& spec, int d, std::optional<int> bound = std::nullopt,
                                           Engine engine = Engine::Beta) {
    return run_query(EnumerationQuery{spec, d, bound, engine});
}

/// The independent oracle entry point: literal-hook row-by-row enumeration
/// of all d-distinct spec-core partitions with largest first-column hook <= B.
inline EnumerationResult enumerate_bruteforce(const CoreSpec& spec, int d, int B) {
    if (d < 0) throw std::invalid_argument("enumerate_bruteforce: d must be nonnegative");
    if (B < 0) throw std::invalid_argument("enumerate_bruteforce: bound must be nonnegative");
    EnumerationQuery q{spec, d, B, Engine::Brute};
    BoundInfo bound{B, "explicit bound supplied by caller", true};
    return detail::assemble(std::move(q), std::move(bound), "brute", detail::brute_engine(spec, d, B));
}

} // namespace corepart
