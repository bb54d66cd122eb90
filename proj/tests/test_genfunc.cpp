#include <catch2/catch_amalgamated.hpp>

#include "corepart/formulas.hpp"
#include "corepart/genfunc.hpp"

using namespace corepart;

TEST_CASE("IntPolynomial trims, indexes, multiplies") {
    IntPolynomial p{1, 2, 0, 3, 0, 0};
    CHECK(p.degree() == 3);
    CHECK(p.coefficients() == std::vector<std::int64_t>{1, 2, 0, 3});
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(7) == 0);
    CHECK(p.coeff(-1) == 0);

    IntPolynomial zero{0, 0};
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero == IntPolynomial{});

    CHECK(IntPolynomial{1, 1} * IntPolynomial{1, -1} == IntPolynomial{1, 0, -1});
    CHECK(IntPolynomial{} * IntPolynomial{5, 1} == IntPolynomial{});
    CHECK(-IntPolynomial{1, -2} == IntPolynomial{-1, 2});

    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(IntPolynomial{big} * IntPolynomial{4}, std::overflow_error);
}

TEST_CASE("RationalGF rejects non-invertible denominators") {
    CHECK_NOTHROW(RationalGF({1}, {1, -1}));
    CHECK_THROWS_AS(RationalGF({1}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(RationalGF({1}, {}), std::invalid_argument);
}

TEST_CASE("gf_from_recurrence reproduces the two known generating functions") {
    auto g2 = gf_from_recurrence({1, 2, 3}, {{1, 1}, {3, 1}});
    CHECK(g2.num == IntPolynomial{1, 1, 1});
    CHECK(g2.den == IntPolynomial{1, -1, 0, -1});

    auto g32 = gf_from_recurrence({1, 2, 3, 5}, {{1, 1}, {4, 1}});
    CHECK(g32.num == IntPolynomial{1, 1, 1, 2});
    CHECK(g32.den == IntPolynomial{1, -1, 0, 0, -1});

    auto ones = gf_from_recurrence({1}, {{1, 1}});
    CHECK(ones.num == IntPolynomial{1});
    CHECK(ones.den == IntPolynomial{1, -1});
}

TEST_CASE("gf_from_recurrence validates its inputs") {
    CHECK_THROWS_AS(gf_from_recurrence({1, 2}, {{3, 1}}), std::invalid_argument); // too few initial
    CHECK_THROWS_AS(gf_from_recurrence({1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(gf_from_recurrence({1}, {{0, 1}}), std::invalid_argument);

    // surplus initial terms are fine when consistent, rejected when not
    auto a = gf_from_recurrence({1, 2, 3, 4}, {{1, 1}, {3, 1}});
    CHECK(a == gf_from_recurrence({1, 2, 3}, {{1, 1}, {3, 1}}));
    CHECK_THROWS_AS(gf_from_recurrence({1, 2, 3, 7}, {{1, 1}, {3, 1}}), std::invalid_argument);
}

TEST_CASE("series_coefficients matches the count tables") {
    auto g2 = gf_from_recurrence({1, 2, 3}, {{1, 1}, {3, 1}});
    CHECK(series_coefficients(g2, 8) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 13, 19});

    auto g32 = gf_from_recurrence({1, 2, 3, 5}, {{1, 1}, {4, 1}});
    CHECK(series_coefficients(g32, 9) == std::vector<std::int64_t>{1, 2, 3, 5, 6, 8, 11, 16, 22});

    auto ones = gf_from_recurrence({1}, {{1, 1}});
    CHECK(series_coefficients(ones, 4) == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(series_coefficients(ones, 0).empty());
}

TEST_CASE("series_coefficients detects non-integer series") {
    RationalGF half{{1}, {2, 1}};
    CHECK_THROWS_AS(series_coefficients(half, 3), std::domain_error);
    RationalGF doubled{{2, 4}, {2, -2}}; // reducible: equals (1+2x)/(1-x)
    CHECK(series_coefficients(doubled, 3) == std::vector<std::int64_t>{1, 3, 3});
}

TEST_CASE("gf_equal identifies sign-flipped display forms") {
    auto a = gf_from_recurrence({1, 2, 3}, {{1, 1}, {3, 1}});
    RationalGF display{{-1, -1, -1}, {-1, 1, 0, 1}}; // -(x^2+x+1) over x^3+x-1
    CHECK(gf_equal(a, display));
    CHECK(canonicalize(display) == a);

    auto b = gf_from_recurrence({1, 2, 3, 5}, {{1, 1}, {4, 1}});
    RationalGF display32{{-1, -1, -1, -2}, {-1, 1, 0, 0, 1}};
    CHECK(gf_equal(b, display32));
    CHECK(canonicalize(display32) == b);

    CHECK_FALSE(gf_equal(RationalGF{{1}, {1, -1}}, RationalGF{{1}, {1, -1, -1}}));
    CHECK(gf_equal(RationalGF{{}, {1}}, RationalGF{{}, {1, -1}}));
}

TEST_CASE("canonicalize strips content and fixes signs") {
    CHECK(canonicalize(RationalGF{{2, 2}, {2, -4}}) == RationalGF{{1, 1}, {1, -2}});
    CHECK(canonicalize(RationalGF{{}, {1, -1}}) == RationalGF{{}, {1}});
    CHECK(canonicalize(RationalGF{{3}, {-3}}) == RationalGF{{-1}, {1}});
    // canonicalization never changes the series
    RationalGF gf{{2, 4}, {2, -2}};
    CHECK(series_coefficients(canonicalize(gf), 6) == series_coefficients(gf, 6));
}

TEST_CASE("recurrence_from_gf round-trips the shifts") {
    const std::vector<RecurrenceTerm> shifts{{1, 1}, {3, 1}};
    auto gf = gf_from_recurrence({1, 2, 3}, shifts);
    CHECK(recurrence_from_gf(gf) == shifts);

    const std::vector<RecurrenceTerm> straubish{{1, 1}, {2, 3}};
    auto gf2 = gf_from_recurrence({1, 3}, straubish);
    CHECK(recurrence_from_gf(gf2) == straubish);

    CHECK_THROWS_AS(recurrence_from_gf(RationalGF{{1}, {2, 1}}), std::domain_error);
}

TEST_CASE("recurrence-built series match the formula counts across families") {
    for (int d = 1; d <= 5; ++d) {
        // r = 1 initial block is 1..d+1; larger r replaces the last entry by d+r
        for (int r = 1; r <= d; ++r) {
            std::vector<std::int64_t> initial;
            for (int s = 1; s <= d; ++s) initial.push_back(s);
            initial.push_back(d + r);
            auto gf = gf_from_recurrence(initial, {{1, 1}, {d + 1, 1}});
            auto coeffs = series_coefficients(gf, 12);
            for (int s = 1; s <= 12; ++s) {
                CAPTURE(d, r, s);
                CHECK(coeffs[static_cast<std::size_t>(s - 1)] == conjectured_count(d, r, s));
                if (r == 1) CHECK(coeffs[static_cast<std::size_t>(s - 1)] == count_ss1(d, s));
            }
        }
    }
}

TEST_CASE("formatting is human-readable") {
    CHECK(format_polynomial(IntPolynomial{1, 1, 1}) == "1 + x + x^2");
    CHECK(format_polynomial(IntPolynomial{1, -1, 0, -1}) == "1 - x - x^3");
    CHECK(format_polynomial(IntPolynomial{1, 1, 1, 2}) == "1 + x + x^2 + 2*x^3");
    CHECK(format_polynomial(IntPolynomial{}) == "0");
    CHECK(format_polynomial(IntPolynomial{-2, 0, 5}) == "-2 + 5*x^2");
    CHECK(format_gf(gf_from_recurrence({1, 2, 3}, {{1, 1}, {3, 1}})) == "(1 + x + x^2) / (1 - x - x^3)");
}
