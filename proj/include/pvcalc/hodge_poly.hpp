#pragma once

/**
 * @file hodge_poly.hpp
 * @brief Integer polynomials in (u, v): Hodge polynomials of strata and
 *        ambient surfaces.
 */

#include "numeric.hpp"

#include <map>
#include <string>
#include <utility>

namespace pvcalc {

class HodgePoly {
public:
    using Monomial = std::pair<int, int>;  // (u-exponent, v-exponent)

    HodgePoly() = default;
    HodgePoly(const Integer& constant) { add_term(0, 0, constant); }

    static HodgePoly monomial(int a, int b, const Integer& coeff = 1) {
        HodgePoly h;
        h.add_term(a, b, coeff);
        return h;
    }
    /// (uv)^k
    static HodgePoly uv_power(int k) { return monomial(k, k); }
    /// H(C) = uv - g(u + v) + 1 for a smooth projective curve of genus g.
    static HodgePoly curve(int genus) {
        HodgePoly h = uv_power(1) + HodgePoly(1);
        h.add_term(1, 0, -genus);
        h.add_term(0, 1, -genus);
        return h;
    }
    static HodgePoly plane() { return uv_power(2) + uv_power(1) + HodgePoly(1); }
    /// Ruled surface over a genus-g curve: (uv + 1)(uv - g u - g v + 1).
    static HodgePoly ruled(int base_genus) { return (uv_power(1) + HodgePoly(1)) * curve(base_genus); }

    void add_term(int a, int b, const Integer& coeff) {
        if (a < 0 || b < 0) throw data_error("negative exponent in Hodge polynomial");
        if (coeff == 0) return;
        auto& slot = terms_[{a, b}];
        slot += coeff;
        if (slot == 0) terms_.erase({a, b});
    }

    const std::map<Monomial, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    bool is_symmetric() const {
        for (const auto& [m, c] : terms_) {
            if (coeff(m.second, m.first) != c) return false;
        }
        return true;
    }
    /// True when every monomial is a power of uv.
    bool is_diagonal() const {
        for (const auto& [m, c] : terms_) if (m.first != m.second) return false;
        return true;
    }

    /// H(1,1), the topological Euler characteristic.
    Integer euler() const {
        Integer s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    HodgePoly& operator+=(const HodgePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, c);
        return *this;
    }
    HodgePoly& operator-=(const HodgePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, -c);
        return *this;
    }
    friend HodgePoly operator+(HodgePoly a, const HodgePoly& b) { return a += b; }
    friend HodgePoly operator-(HodgePoly a, const HodgePoly& b) { return a -= b; }
    friend HodgePoly operator*(const HodgePoly& a, const HodgePoly& b) {
        HodgePoly r;
        for (const auto& [m1, c1] : a.terms_) {
            for (const auto& [m2, c2] : b.terms_) r.add_term(m1.first + m2.first, m1.second + m2.second, c1 * c2);
        }
        return r;
    }
    friend bool operator==(const HodgePoly&, const HodgePoly&) = default;

    /// e.g. "u^2*v^2 + u*v + 1"; monomials in decreasing (u, v) lexicographic order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto [a, b] = it->first;
            Integer c = it->second;
            bool neg = c < 0;
            Integer mag = neg ? Integer(-c) : c;
            if (first) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            first = false;
            std::string mono;
            auto var = [&](const char* name, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += name;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            var("u", a);
            var("v", b);
            if (mono.empty()) out += mag.str();
            else if (mag == 1) out += mono;
            else out += mag.str() + "*" + mono;
        }
        return out;
    }

private:
    // Ordered by (a, b); str() walks it backwards.
    std::map<Monomial, Integer> terms_;
};

}  // namespace pvcalc
