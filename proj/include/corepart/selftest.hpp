#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corepart/cache.hpp"
#include "corepart/enumerate.hpp"
#include "corepart/formulas.hpp"
#include "corepart/genfunc.hpp"
#include "corepart/partition.hpp"
#include "corepart/verify.hpp"

namespace corepart {

namespace detail {

inline void collect_partitions(int remaining, int max_part, std::vector<int>& acc,
                               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        collect_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

inline std::vector<Partition> all_partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    collect_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

} // namespace detail

struct SelfTestResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Runs a reduced-range sweep of every invariant the library is built on.
/// Each check re-derives its expectation from an independent construction, so
/// a passing matrix means the formulas, the two engines, and the bijections
/// all agree with the literal definitions.
inline std::vector<SelfTestResult> run_selftests() {
    std::vector<SelfTestResult> results;
    auto check = [&](const std::string& name, const std::function<void(SelfTestResult&)>& body) {
        SelfTestResult r;
        r.name = name;
        try {
            body(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    };
    auto fail = [](SelfTestResult& r, const std::string& why) {
        r.pass = false;
        if (r.detail.empty()) r.detail = why;
    };

    check("hook formula matches literal box count (n <= 8)", [&](SelfTestResult& r) {
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : detail::all_partitions_of(n))
                for (int i = 1; i <= p.length(); ++i)
                    for (int j = 1; j <= p.part(i); ++j)
                        if (hook_length(p, i, j) != hook_length_counted(p, i, j))
                            return fail(r, "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                               ") of " + to_brace_string(p));
    });

    check("beta set roundtrip is the identity (n <= 10)", [&](SelfTestResult& r) {
        for (int n = 0; n <= 10; ++n)
            for (const auto& p : detail::all_partitions_of(n))
                if (partition_from_beta_set(beta_set(p)) != p) return fail(r, to_brace_string(p));
    });

    check("beta set recovers the size (n <= 10)", [&](SelfTestResult& r) {
        for (int n = 0; n <= 10; ++n)
            for (const auto& p : detail::all_partitions_of(n))
                if (size_from_beta_set(beta_set(p)) != p.size()) return fail(r, to_brace_string(p));
    });

    check("d-distinct parts iff twin-free beta set (n <= 8, d <= 3)", [&](SelfTestResult& r) {
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : detail::all_partitions_of(n))
                for (int d = 1; d <= 3; ++d)
                    if (is_d_distinct(p, d) != is_twin_free(beta_set(p), d))
                        return fail(r, to_brace_string(p) + " d=" + std::to_string(d));
    });

    check("s-core by hooks iff beta set closed under subtracting s (n <= 10, s <= 8)",
          [&](SelfTestResult& r) {
              for (int n = 0; n <= 10; ++n)
                  for (const auto& p : detail::all_partitions_of(n))
                      for (int s = 1; s <= 8; ++s)
                          if (is_core(p, CoreSpec{s}) != is_core_via_beta(beta_set(p), s))
                              return fail(r, to_brace_string(p) + " s=" + std::to_string(s));
          });

    check("worked example: nine (6,7)-core partitions with 2-distinct parts",
          [&](SelfTestResult& r) {
              const auto got = enumerate_ss1(6, 2).partitions;
              const std::vector<Partition> want = {
                  Partition{}, Partition{{1}}, Partition{{2}}, Partition{{3}},
                  Partition{{4}}, Partition{{3, 1}}, Partition{{5}}, Partition{{4, 1}},
                  Partition{{4, 2}}};
              if (got != want) return fail(r, "got " + std::to_string(got.size()) + " partitions");
          });

    check("recurrence count equals enumeration (d <= 3, s <= 10)", [&](SelfTestResult& r) {
        for (int d = 1; d <= 3; ++d)
            for (int s = 1; s <= 10; ++s)
                if (count_ss1(d, s) != enumerate_ss1(s, d).count)
                    return fail(r, "d=" + std::to_string(d) + " s=" + std::to_string(s));
    });

    check("both engines agree on (s,s+1) queries (d <= 3, s <= 9)", [&](SelfTestResult& r) {
        for (int d = 1; d <= 3; ++d)
            for (int s = 1; s <= 9; ++s) {
                EnumerationQuery q{CoreSpec{s, s + 1}, d, std::nullopt, Engine::Both};
                run_query(q);  // throws EngineMismatchError on disagreement
            }
        (void)r;
    });

    check("both engines agree on (s,s+r) queries (r <= d <= 3, s <= 7)", [&](SelfTestResult& r) {
        for (int d = 1; d <= 3; ++d)
            for (int rr = 1; rr <= d; ++rr)
                for (int s = 1; s <= 7; ++s) {
                    EnumerationQuery q{CoreSpec{s, s + rr}, d, std::nullopt, Engine::Both};
                    run_query(q);
                }
        (void)r;
    });

    check("largest-size formula equals enumerated maximum (d <= 3, s <= 10)",
          [&](SelfTestResult& r) {
              for (int d = 1; d <= 3; ++d)
                  for (int s = 1; s <= 10; ++s)
                      if (largest_size_ss1(d, s) != enumerate_ss1(s, d).max_size)
                          return fail(r, "d=" + std::to_string(d) + " s=" + std::to_string(s));
          });

    check("count of largest partitions matches enumeration (d <= 3, s <= 10)",
          [&](SelfTestResult& r) {
              for (int d = 1; d <= 3; ++d)
                  for (int s = 1; s <= 10; ++s)
                      if (num_largest_ss1(d, s) !=
                          static_cast<std::int64_t>(enumerate_ss1(s, d).argmax.size()))
                          return fail(r, "d=" + std::to_string(d) + " s=" + std::to_string(s));
          });

    check("constructed maximal partitions match enumerated argmax (d <= 3, s <= 10)",
          [&](SelfTestResult& r) {
              for (int d = 1; d <= 3; ++d)
                  for (int s = 1; s <= 10; ++s) {
                      auto built = maximal_partitions_ss1(d, s);
                      auto found = enumerate_ss1(s, d).argmax;
                      std::sort(built.begin(), built.end(),
                                [](const Partition& a, const Partition& b) { return canonical_less(a, b); });
                      if (built != found)
                          return fail(r, "d=" + std::to_string(d) + " s=" + std::to_string(s));
                  }
          });

    check("conjectured two-parameter counts hold on a small grid (d <= 4, s <= 8)",
          [&](SelfTestResult& r) {
              const auto report = verify_conjecture(4, 8);
              if (report.mismatched != 0)
                  return fail(r, std::to_string(report.mismatched) + " mismatches");
          });

    check("d = 0 counts of (s,s+1)-cores are the Catalan numbers (s <= 5)",
          [&](SelfTestResult& r) {
              for (int s = 1; s <= 5; ++s)
                  if (enumerate_general(CoreSpec{s, s + 1}, 0).count != catalan(s))
                      return fail(r, "s=" + std::to_string(s));
          });

    check("coprime pair counts match the binomial formula (a+b <= 9)", [&](SelfTestResult& r) {
        for (int a = 1; a <= 8; ++a)
            for (int b = a + 1; a + b <= 9; ++b) {
                if (gcd64(a, b) != 1) continue;
                if (enumerate_general(CoreSpec{a, b}, 0).count != anderson_count(a, b))
                    return fail(r, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
    });

    check("distinct-part counts of (s,ds-1)-cores follow the two-step recurrence (d <= 2, s <= 5)",
          [&](SelfTestResult& r) {
              for (int d = 1; d <= 2; ++d)
                  for (int s = 1; s <= 5; ++s) {
                      const int other = d * s - 1;
                      const CoreSpec spec = other >= 1 && other != s ? CoreSpec{s, other}
                                                                     : CoreSpec{std::min(s, std::max(other, 1))};
                      if (enumerate_general(spec, 1).count != straub_count(d, s))
                          return fail(r, "d=" + std::to_string(d) + " s=" + std::to_string(s));
                  }
          });

    check("generating function reproduces the recurrence values (d <= 3)", [&](SelfTestResult& r) {
        for (int d = 1; d <= 3; ++d) {
            std::vector<std::int64_t> initial;
            for (int s = 1; s <= d + 1; ++s) initial.push_back(count_ss1(d, s));
            const auto gf = gf_from_recurrence(initial, {{1, 1}, {d + 1, 1}});
            const auto series = series_coefficients(gf, 10);
            for (int s = 1; s <= 10; ++s)
                if (series[static_cast<std::size_t>(s - 1)] != count_ss1(d, s))
                    return fail(r, "d=" + std::to_string(d) + " s=" + std::to_string(s));
        }
    });

    check("rational function equality survives a sign flip", [&](SelfTestResult& r) {
        const RationalGF a{IntPolynomial{{1, 1, 1}}, IntPolynomial{{1, -1, 0, -1}}};
        const RationalGF b{IntPolynomial{{-1, -1, -1}}, IntPolynomial{{-1, 1, 0, 1}}};
        if (!gf_equal(a, b) || canonicalize(a) != canonicalize(b)) return fail(r, "forms differ");
    });

    check("search bounds: frozen derivations", [&](SelfTestResult& r) {
        if (derive_beta_bound(CoreSpec{6, 7}, 2).value != 6) return fail(r, "{6,7} d=2");
        if (derive_beta_bound(CoreSpec{3, 4}, 0).value != 5) return fail(r, "{3,4} d=0");
        if (derive_beta_bound(CoreSpec{2, 3}, 0).value != 1) return fail(r, "{2,3} d=0");
        try {
            derive_beta_bound(CoreSpec{4, 6, 8}, 1);
            return fail(r, "{4,6,8} d=1 should be unbounded");
        } catch (const UnboundedQueryError&) {
        }
    });

    check("cache stores and reloads a result byte for byte", [&](SelfTestResult& r) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(
            std::chrono::steady_clock::now().time_since_epoch().count()));
        const auto dir = std::filesystem::temp_directory_path() /
                         ("corepart-selftest-" + hex64(rng()));
        CacheConfig cfg{dir, true};
        EnumerationQuery q{CoreSpec{6, 7}, 2, std::nullopt, Engine::Both};
        const auto computed = run_query(q);
        if (!cache_store(cfg, q, computed)) return fail(r, "store failed");
        const auto loaded = cache_load(cfg, q);
        std::error_code ec;
        std::filesystem::remove_all(dir, ec);
        if (!loaded) return fail(r, "load missed");
        if (json_of_result(*loaded).dump() != json_of_result(computed).dump())
            return fail(r, "reloaded result differs");
    });

    return results;
}

/// Prints one line per check plus a summary; returns true iff everything passed.
inline bool print_selftests(std::ostream& out) {
    const auto results = run_selftests();
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass && !r.detail.empty()) out << " -- " << r.detail;
        out << '\n';
        if (r.pass) ++passed;
    }
    out << passed << "/" << results.size() << " self-tests passed\n";
    return passed == results.size();
}

} // namespace corepart
