#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corepart/common.hpp"

namespace corepart {

/// Dense integer polynomial, coefficient index = degree, trailing zeros
/// trimmed so equal polynomials compare equal. The zero polynomial has an
/// empty coefficient list and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::int64_t coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : 0;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<std::int64_t> c = a.coeffs_;
        for (auto& v : c) v = checked_sub(0, v);
        return IntPolynomial(std::move(c));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<std::int64_t> coeffs_;
};

/// Ratio of integer polynomials viewed as a formal power series; the
/// denominator must be invertible as a series, i.e. nonzero at x = 0.
struct RationalGF {
    IntPolynomial num;
    IntPolynomial den;

    RationalGF(IntPolynomial n, IntPolynomial d) : num(std::move(n)), den(std::move(d)) {
        if (den.coeff(0) == 0)
            throw std::invalid_argument("RationalGF: denominator constant term must be nonzero");
    }

    friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// One term of a linear recurrence a(s) = sum coefficient * a(s - offset).
struct RecurrenceTerm {
    int offset = 1;
    std::int64_t coefficient = 1;

    friend bool operator==(const RecurrenceTerm&, const RecurrenceTerm&) = default;
};

namespace detail {

inline std::int64_t content(const IntPolynomial& p) {
    std::int64_t g = 0;
    for (std::int64_t c : p.coefficients()) g = gcd64(g, c);
    return g;
}

} // namespace detail

/// Scale num and den by the same rational so the content gcd is 1 and the
/// denominator's constant term is positive (+1 whenever achievable); the
/// zero series collapses to 0/1. Value-preserving in all cases.
inline RationalGF canonicalize(const RationalGF& gf) {
    if (gf.num.is_zero()) return RationalGF({}, {1});
    const std::int64_t g = gcd64(detail::content(gf.num), detail::content(gf.den));
    auto scale = [&](const IntPolynomial& p) {
        std::vector<std::int64_t> c = p.coefficients();
        for (auto& v : c) v /= g;
        return IntPolynomial(std::move(c));
    };
    IntPolynomial num = scale(gf.num), den = scale(gf.den);
    if (den.coeff(0) < 0) {
        num = -num;
        den = -den;
    }
    return RationalGF(std::move(num), std::move(den));
}

/**
 * The rational function whose series c_0, c_1, ... carries the sequence with
 * c_{s-1} = a(s): denominator 1 - sum coeff*x^offset, numerator of degree
 * below the largest offset read off from the initial terms. Extra initial
 * terms are allowed but must already satisfy the recurrence.
 */
inline RationalGF gf_from_recurrence(const std::vector<std::int64_t>& initial,
                                     const std::vector<RecurrenceTerm>& terms) {
    if (terms.empty()) throw std::invalid_argument("gf_from_recurrence: at least one recurrence term required");
    int max_off = 0;
    for (const auto& t : terms) {
        if (t.offset < 1) throw std::invalid_argument("gf_from_recurrence: offsets must be >= 1");
        max_off = std::max(max_off, t.offset);
    }
    if (static_cast<int>(initial.size()) < max_off)
        throw std::invalid_argument("gf_from_recurrence: need at least " + std::to_string(max_off) +
                                    " initial terms, got " + std::to_string(initial.size()));
    std::vector<std::int64_t> den(static_cast<std::size_t>(max_off) + 1, 0);
    den[0] = 1;
    for (const auto& t : terms)
        den[static_cast<std::size_t>(t.offset)] = checked_sub(den[static_cast<std::size_t>(t.offset)], t.coefficient);
    std::vector<std::int64_t> num(initial.size(), 0);
    for (std::size_t k = 0; k < initial.size(); ++k) {
        std::int64_t v = initial[k];
        for (const auto& t : terms)
            if (static_cast<std::size_t>(t.offset) <= k)
                v = checked_sub(v, checked_mul(t.coefficient, initial[k - static_cast<std::size_t>(t.offset)]));
        if (static_cast<int>(k) >= max_off && v != 0)
            throw std::invalid_argument("gf_from_recurrence: initial term at index " + std::to_string(k + 1) +
                                        " violates the recurrence");
        num[k] = v;
    }
    return RationalGF(IntPolynomial(std::move(num)), IntPolynomial(std::move(den)));
}

/// First n Taylor coefficients, exactly: each one is forced by the previous
/// ones through the denominator. Non-integer coefficients are an error.
inline std::vector<std::int64_t> series_coefficients(const RationalGF& gf, int n) {
    if (n < 0) throw std::invalid_argument("series_coefficients: n must be nonnegative");
    const std::int64_t d0 = gf.den.coeff(0);
    std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        std::int64_t v = gf.num.coeff(k);
        for (int j = 1; j <= gf.den.degree() && j <= k; ++j)
            v = checked_sub(v, checked_mul(gf.den.coeff(j), c[static_cast<std::size_t>(k - j)]));
        if (v % d0 != 0)
            throw std::domain_error("series_coefficients: coefficient of x^" + std::to_string(k) +
                                    " is not an integer");
        c[static_cast<std::size_t>(k)] = v / d0;
    }
    return c;
}

/// Exact identity of formal series via cross-multiplication.
inline bool gf_equal(const RationalGF& a, const RationalGF& b) {
    return a.num * b.den == b.num * a.den;
}

/// Inverse of gf_from_recurrence on the denominator: the terms of the
/// recurrence the series obeys beyond the numerator degree.
inline std::vector<RecurrenceTerm> recurrence_from_gf(const RationalGF& gf) {
    const RationalGF c = canonicalize(gf);
    if (c.den.coeff(0) != 1)
        throw std::domain_error("recurrence_from_gf: denominator cannot be normalized to constant term 1");
    std::vector<RecurrenceTerm> out;
    for (int j = 1; j <= c.den.degree(); ++j)
        if (c.den.coeff(j) != 0) out.push_back({j, checked_sub(0, c.den.coeff(j))});
    return out;
}

inline std::string format_polynomial(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const std::int64_t c = p.coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const std::int64_t a = c < 0 ? -c : c;
        if (k == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << "x";
            if (k >= 2) out << "^" << k;
        }
    }
    return out.str();
}

inline std::string format_gf(const RationalGF& gf) {
    return "(" + format_polynomial(gf.num) + ") / (" + format_polynomial(gf.den) + ")";
}

} // namespace corepart
