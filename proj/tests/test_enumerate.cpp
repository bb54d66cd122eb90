#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "corepart/enumerate.hpp"
#include "partitions_of.hpp"

using namespace corepart;

namespace {

std::set<std::vector<int>> part_set(const EnumerationResult& r) {
    std::set<std::vector<int>> s;
    for (const auto& p : r.partitions) s.insert(p.parts());
    return s;
}

} // namespace

TEST_CASE("derive_beta_bound picks the tightest justified rule") {
    auto b = derive_beta_bound(CoreSpec{6, 7}, 2);
    CHECK(b.value == 6); // adjacent pair beats Frobenius 29
    CHECK_FALSE(b.explicit_override);

    CHECK(derive_beta_bound(CoreSpec{6, 8}, 3).value == 7);
    CHECK(derive_beta_bound(CoreSpec{3, 4}, 0).value == 5);  // Frobenius only
    CHECK(derive_beta_bound(CoreSpec{2, 3}, 0).value == 1);
    CHECK(derive_beta_bound(CoreSpec{1}, 0).value == 0);
    CHECK(derive_beta_bound(CoreSpec{1, 4}, 0).value == 0);
    CHECK(derive_beta_bound(CoreSpec{4, 6}, 2).value == 5);  // gap 2 <= d
    CHECK(derive_beta_bound(CoreSpec{6, 17}, 1).value == 79);

    CHECK(derive_beta_bound(CoreSpec{4, 6, 9}, 0).value == 23); // coprime pair (4,9)

    CHECK_THROWS_AS(derive_beta_bound(CoreSpec{4, 6}, 1), UnboundedQueryError);
    CHECK_THROWS_AS(derive_beta_bound(CoreSpec{5}, 3), UnboundedQueryError);
    CHECK_THROWS_AS(derive_beta_bound(CoreSpec{4, 6, 8}, 1), UnboundedQueryError);
    CHECK(derive_beta_bound(CoreSpec{4, 6, 8}, 2).value == 5); // pair (4,6) qualifies
}

TEST_CASE("enumerate_ss1(6,2) returns the nine known partitions in canonical order") {
    auto r = enumerate_ss1(6, 2);
    CHECK(r.count == 9);
    const std::vector<Partition> expected = {
        Partition{},     Partition{1},    Partition{2},    Partition{3},    Partition{4},
        Partition{3, 1}, Partition{5},    Partition{4, 1}, Partition{4, 2},
    };
    CHECK(r.partitions == expected);
    CHECK(r.max_size == 6);
    CHECK(r.argmax == std::vector<Partition>{Partition{4, 2}});
    CHECK(r.histogram.at(4) == 2);
    CHECK(r.histogram.at(0) == 1);
}

TEST_CASE("enumerate_ss1(5,2) returns the six known partitions") {
    auto r = enumerate_ss1(5, 2);
    CHECK(r.count == 6);
    CHECK(part_set(r) == std::set<std::vector<int>>{{}, {1}, {2}, {3}, {3, 1}, {4}});
    CHECK(r.max_size == 4);
    CHECK(r.argmax == std::vector<Partition>{Partition{4}, Partition{3, 1}});
}

TEST_CASE("enumerate_ss1 edge cases and validation") {
    auto r = enumerate_ss1(1, 3);
    CHECK(r.count == 1);
    CHECK(r.partitions == std::vector<Partition>{Partition{}});
    CHECK(r.max_size == 0);
    CHECK(r.argmax == std::vector<Partition>{Partition{}});

    CHECK_THROWS_AS(enumerate_ss1(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_ss1(5, 0), std::invalid_argument);
}

TEST_CASE("enumerate_s_splusr cell values") {
    auto r = enumerate_s_splusr(6, 2, 3);
    CHECK(r.count == 8);
    CHECK(part_set(r) ==
          std::set<std::vector<int>>{{}, {1}, {2}, {3}, {4}, {5}, {4, 1}, {6, 1}});

    CHECK(enumerate_s_splusr(2, 2, 2).count == 2);
    CHECK(enumerate_s_splusr(5, 2, 2).count == 7);
    CHECK(enumerate_s_splusr(3, 3, 3).count == 3);

    CHECK_THROWS_AS(enumerate_s_splusr(6, 3, 2), std::invalid_argument); // r > d
    CHECK_THROWS_AS(enumerate_s_splusr(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_s_splusr(6, 0, 2), std::invalid_argument);
}

TEST_CASE("enumerate_s_splusr with r = 1 matches enumerate_ss1") {
    for (int s = 1; s <= 10; ++s)
        for (int d = 1; d <= 4; ++d)
            CHECK(enumerate_s_splusr(s, 1, d).partitions == enumerate_ss1(s, d).partitions);
}

TEST_CASE("enumerate_general handles unconstrained d = 0 families") {
    CHECK(enumerate_general(CoreSpec{3, 4}, 0).count == 5);
    CHECK(enumerate_general(CoreSpec{2, 3}, 0).count == 2);

    auto r = enumerate_general(CoreSpec{3, 5}, 1);
    CHECK(r.count == 4);
    CHECK(part_set(r) == std::set<std::vector<int>>{{}, {1}, {2}, {3, 1}});

    CHECK_THROWS_AS(enumerate_general(CoreSpec{4, 6}, 1), UnboundedQueryError);
}

TEST_CASE("d = 0 counts of consecutive-pair cores are the Catalan numbers") {
    const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int s = 1; s <= 8; ++s) {
        CAPTURE(s);
        CHECK(enumerate_general(CoreSpec{s, s + 1}, 0).count == catalan[s]);
    }
}

TEST_CASE("explicit bound override is honored and labeled") {
    auto r = enumerate_general(CoreSpec{4, 6}, 1, 10);
    CHECK(r.bound.value == 10);
    CHECK(r.bound.explicit_override);
    CHECK(r.count >= 1);
    for (const auto& p : r.partitions) {
        CHECK(is_core(p, CoreSpec{4, 6}));
        CHECK(is_d_distinct(p, 1));
        if (!p.empty()) CHECK(beta_set(p).elements().front() <= 10);
    }
    auto brute = enumerate_bruteforce(CoreSpec{4, 6}, 1, 10);
    CHECK(r.partitions == brute.partitions);

    CHECK_THROWS_AS(enumerate_general(CoreSpec{4, 6}, 1, -1), std::invalid_argument);
}

TEST_CASE("enumerate_bruteforce agrees with the beta engines on known cells") {
    CHECK(enumerate_bruteforce(CoreSpec{6, 7}, 2, 5).partitions == enumerate_ss1(6, 2).partitions);
    CHECK(enumerate_bruteforce(CoreSpec{6, 8}, 3, 7).partitions == enumerate_s_splusr(6, 2, 3).partitions);

    auto r = enumerate_bruteforce(CoreSpec{5}, 0, 0);
    CHECK(r.partitions == std::vector<Partition>{Partition{}});
    CHECK_THROWS_AS(enumerate_bruteforce(CoreSpec{5}, 0, -1), std::invalid_argument);
}

TEST_CASE("beta and brute engines return identical sets across a grid") {
    for (int s = 1; s <= 10; ++s)
        for (int d = 1; d <= 4; ++d) {
            CAPTURE(s, d);
            auto q = EnumerationQuery{CoreSpec{s, s + 1}, d, std::nullopt, Engine::Both};
            CHECK_NOTHROW(run_query(q)); // Both throws on any disagreement
        }
    for (int s = 1; s <= 8; ++s)
        for (int d = 1; d <= 4; ++d)
            for (int r = 1; r <= d; ++r) {
                CAPTURE(s, d, r);
                auto q = EnumerationQuery{CoreSpec{s, s + r}, d, std::nullopt, Engine::Both};
                CHECK_NOTHROW(run_query(q));
            }
}

TEST_CASE("the backtracking engine matches the bitmask engine above the cutoff") {
    // Same query, one explicit bound below 30 (bitmask) and the true derived
    // bound above it (backtracking); both caps are valid, so results match.
    auto small = enumerate_general(CoreSpec{4, 7}, 1, 17); // Frobenius bound exactly
    auto large = enumerate_general(CoreSpec{4, 7}, 1, 40); // forces backtracking path
    CHECK(small.partitions == large.partitions);
    CHECK(small.count == 8);

    auto direct = enumerate_general(CoreSpec{4, 7}, 1);
    CHECK(direct.bound.value == 17);
    CHECK(direct.partitions == small.partitions);
}

TEST_CASE("every enumerated partition passes the oracle predicates") {
    for (int s = 1; s <= 12; ++s)
        for (int d = 1; d <= 4; ++d) {
            auto r = enumerate_ss1(s, d);
            for (const auto& p : r.partitions) {
                CHECK(is_core(p, CoreSpec{s, s + 1}));
                CHECK(is_d_distinct(p, d));
                if (!p.empty()) CHECK(beta_set(p).elements().front() <= s - 1);
            }
        }
}

TEST_CASE("counts are nondecreasing in s") {
    for (int d = 1; d <= 4; ++d) {
        std::int64_t prev = 0;
        for (int s = 1; s <= 12; ++s) {
            auto c = enumerate_ss1(s, d).count;
            CHECK(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("k-part size bound holds on every enumerated partition") {
    // Any (s,s+1)-core with d-distinct parts and k parts has size at most
    // s*k + (d*k - d*k^2)/2 - k^2.
    for (int s = 1; s <= 12; ++s)
        for (int d = 1; d <= 4; ++d)
            for (const auto& p : enumerate_ss1(s, d).partitions) {
                const std::int64_t k = p.length();
                CHECK(p.size() <= s * k + (d * k - d * k * k) / 2 - k * k);
            }
}

TEST_CASE("run_query validates inputs and reports engine labels") {
    CHECK_THROWS_AS(run_query(EnumerationQuery{CoreSpec{3, 4}, -1, std::nullopt, Engine::Beta}),
                    std::invalid_argument);
    CHECK(run_query(EnumerationQuery{CoreSpec{3, 4}, 0, std::nullopt, Engine::Beta}).engine == "beta");
    CHECK(run_query(EnumerationQuery{CoreSpec{3, 4}, 0, std::nullopt, Engine::Brute}).engine == "brute");
    CHECK(run_query(EnumerationQuery{CoreSpec{3, 4}, 0, std::nullopt, Engine::Both}).engine == "both");
}

TEST_CASE("engine names round-trip") {
    for (Engine e : {Engine::Beta, Engine::Brute, Engine::Both})
        CHECK(engine_from_name(engine_name(e)) == e);
    CHECK_THROWS_AS(engine_from_name("quantum"), std::invalid_argument);
}
