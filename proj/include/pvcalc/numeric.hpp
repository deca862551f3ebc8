#pragma once

/**
 * @file numeric.hpp
 * @brief Exact integer/rational aliases, error types and small helpers shared
 *        by every pvcalc module.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pvcalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error hierarchy. Everything thrown by the library derives from `error`.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Fractional exponent not representable with the context denominator d.
struct exponent_error : error { using error::error; };
/// Mixing ring elements built for different d.
struct context_error : error { using error::error; };
/// (L-1)/(L^0-1): a logarithmic pole reached a place where it is not allowed.
struct division_by_zero_error : error { using error::error; };
/// Euler realization undefined for this representative.
struct chi_domain_error : error { using error::error; };
/// Configuration or datum fails a structural/geometric precondition.
struct data_error : error { using error::error; };
/// Random generator exhausted its retry bound.
struct generator_error : error { using error::error; };
/// Malformed textual or JSON input.
struct parse_error : error { using error::error; };

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

/// r * d as an exact integer, or exponent_error.
inline std::int64_t scaled_exponent(const Rational& r, int d) {
    Rational s = r * d;
    if (!is_integral(s)) {
        throw exponent_error("exponent " + r.str() + " is not a multiple of 1/" + std::to_string(d));
    }
    return numerator(s).convert_to<std::int64_t>();
}

inline std::string to_string(const Rational& r) {
    if (is_integral(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "p", "-p", "p/q" (spaces tolerated around '/').
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s.push_back(c);
    }
    auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    auto to_int = [](std::string_view t) {
        if (!t.empty() && t[0] == '+') t.remove_prefix(1);
        return Integer(std::string(t));
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw parse_error("not a rational number: '" + std::string(text) + "'");
        return Rational(to_int(s));
    }
    std::string_view num(s.data(), slash), den(s.data() + slash + 1, s.size() - slash - 1);
    if (!valid_int(num) || !valid_int(den)) {
        throw parse_error("not a rational number: '" + std::string(text) + "'");
    }
    Integer dd = to_int(den);
    if (dd == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(to_int(num)) / Rational(dd);  // the two-argument form rejects negative denominators
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Floor of the k-th root of a non-negative integer, by bisection.
inline Integer integer_root(const Integer& n, unsigned k) {
    if (n < 2 || k == 1) return n;
    Integer lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, k) <= n) hi *= 2;
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, k) <= n) lo = mid; else hi = mid;
    }
    return lo;
}

}  // namespace pvcalc
