#pragma once

/**
 * @file pvint.hpp
 * @brief The invariant E_X(D, w^(1/d)) of an allowed pair, the motivic
 *        principal value integral, and their Hodge, Euler and p-adic
 *        specializations.
 *
 *   E_X = sum_{I, alpha_i != 0 on I} [C_I^o] prod_{i in I} (L-1)/(L^alpha_i - 1)
 *       + sum_{alpha_i = 0} (-C_i.C_i) prod_{j in T_i} (L-1)/(L^alpha_j - 1)
 *
 * The index set I runs over all subsets of T including the empty one, so the
 * I = {} term is [X \ D]. The alpha = 0 terms use the product over every
 * neighbour; the two-neighbour and one-neighbour simplifications are only
 * used as test oracles.
 */

#include "ring_elem.hpp"
#include "root_field.hpp"
#include "surface.hpp"

#include <string>
#include <vector>

namespace pvcalc {

namespace detail {

inline void require_valid(const Config& c) {
    Report r = validate(c);
    if (!r.ok()) {
        std::string msg = "configuration is not valid/allowed:";
        for (const auto& f : r.findings) {
            if (f.severity == Severity::error) msg += "\n  " + f.message;
        }
        throw data_error(msg);
    }
}

/// Distinct unordered pairs of curves that meet, with their meet counts.
inline std::vector<std::pair<std::pair<std::string, std::string>, int>> meeting_pairs(const Config& c) {
    std::vector<std::pair<std::pair<std::string, std::string>, int>> out;
    for (const auto& p : c.points) {
        if (!out.empty() && out.back().first == std::pair{p.a, p.b}) ++out.back().second;
        else out.push_back({{p.a, p.b}, 1});
    }
    return out;
}

}  // namespace detail

/// E_X(D, w^(1/d)) in A_d. Requires a valid, allowed configuration.
inline RingElem e_invariant(const Config& c) {
    detail::require_valid(c);
    const int d = c.d;
    RingElem e = RingElem::from_hodge(d, stratum_class(c, {}));
    for (const auto& cur : c.curves) {
        if (cur.alpha == 0) continue;
        e += RingElem::from_hodge(d, stratum_class(c, {cur.id})) * lfactor(d, cur.alpha);
    }
    for (const auto& [pair, count] : detail::meeting_pairs(c)) {
        const Rational& a1 = c.curve(pair.first).alpha;
        const Rational& a2 = c.curve(pair.second).alpha;
        if (a1 == 0 || a2 == 0) continue;
        e += Integer(count) * (lfactor(d, a1) * lfactor(d, a2));
    }
    for (const auto& cur : c.curves) {
        if (cur.alpha != 0) continue;
        RingElem prod(d, 1);
        for (const auto& n : c.neighbors(cur.id)) prod *= lfactor(d, c.curve(n).alpha);
        e += Integer(-cur.self_int) * prod;
    }
    return e;
}

/// L^-2 E_X: the motivic principal value integral on a surface. Only defined
/// without logarithmic poles.
inline RingElem pv_integral(const Config& c) {
    for (const auto& cur : c.curves) {
        if (cur.alpha == 0) {
            throw division_by_zero_error("principal value integral undefined: curve " + cur.id +
                                         " has alpha = 0 (logarithmic pole)");
        }
    }
    return lpow(c.d, Rational(-2)) * e_invariant(c);
}

/// Hodge-level rendering of E_X, with uv in place of L.
inline std::string e_hodge(const Config& c) { return render_hodge(e_invariant(c)); }

/// e_X: the direct Euler-characteristic formula, with chi(C_I^o) and 1/alpha.
inline Rational e_euler(const Config& c) {
    detail::require_valid(c);
    Rational e = Rational(stratum_class(c, {}).euler());
    for (const auto& cur : c.curves) {
        if (cur.alpha == 0) continue;
        e += Rational(stratum_class(c, {cur.id}).euler()) / cur.alpha;
    }
    for (const auto& [pair, count] : detail::meeting_pairs(c)) {
        const Rational& a1 = c.curve(pair.first).alpha;
        const Rational& a2 = c.curve(pair.second).alpha;
        if (a1 == 0 || a2 == 0) continue;
        e += Rational(count) / (a1 * a2);
    }
    for (const auto& cur : c.curves) {
        if (cur.alpha != 0) continue;
        Rational prod = 1;
        for (const auto& n : c.neighbors(cur.id)) prod /= c.curve(n).alpha;
        e += Rational(-cur.self_int) * prod;
    }
    return e;
}

/// Number of F_q-points of a variety with Hodge polynomial h, where the only
/// non-Tate part is -(u+v) R(uv) coming from a curve of genus g with
/// Frobenius trace a (u + v contributes a / g). Tate polynomials need no g.
inline Integer point_count(const HodgePoly& h, const Integer& q, int genus, const Integer& trace) {
    Integer n = 0;
    Rational off = 0;
    for (const auto& [m, c] : h.terms()) {
        auto [a, b] = m;
        if (a == b) {
            n += c * boost::multiprecision::pow(q, static_cast<unsigned>(a));
        } else if (a == b + 1) {
            // u^(k+1) v^k together with its mirror v^(k+1) u^k: c (u+v)(uv)^k.
            if (h.coeff(b, a) != c) throw data_error("point count needs a symmetric Hodge polynomial");
            if (genus <= 0) throw data_error("non-Tate Hodge polynomial but no positive genus to attach a Frobenius trace to");
            off += Rational(c * boost::multiprecision::pow(q, static_cast<unsigned>(b))) * Rational(trace) / Rational(genus);
        } else if (b == a + 1) {
            continue;  // mirror of the branch above
        } else {
            throw data_error("point count undefined for Hodge monomial u^" + std::to_string(a) + " v^" + std::to_string(b));
        }
    }
    if (!is_integral(off)) throw data_error("Frobenius trace does not give an integral point count");
    return n + numerator(off);
}

/// E^L_X with F_q point counts, exact in Q(q^(1/d)); returned as a length-d
/// coefficient vector in powers of x = q^(1/d). Intersection points are taken
/// to be F_q-rational. This is the right-hand side only: its identification
/// with the p-adic principal value integral needs good reduction, which is
/// assumed, not checked.
inline std::vector<Rational> e_padic(const Config& c, const Integer& q) {
    detail::require_valid(c);
    RootField field(c.d, q);
    auto curve_count = [&](const Curve& cur) {
        return cur.genus == 0 ? Integer(q + 1) : Integer(q + 1 - cur.trace);
    };
    auto factor = [&](const Rational& alpha) {
        // (q - 1)/(q^alpha - 1) with q = theta^d
        RootField::Elem num = field.sub(field.theta_power(c.d), field.constant(1));
        RootField::Elem den = field.sub(field.theta_power(scaled_exponent(alpha, c.d)), field.constant(1));
        return field.mul(num, field.inverse(den));
    };

    Integer open = point_count(c.ambient, q, c.base_genus, c.base_trace);
    for (const auto& cur : c.curves) open -= curve_count(cur);
    open += static_cast<long long>(c.points.size());
    RootField::Elem e = field.constant(Rational(open));

    for (const auto& cur : c.curves) {
        if (cur.alpha == 0) continue;
        Integer n = curve_count(cur) - c.points_on(cur.id);
        e = field.add(e, field.scale(factor(cur.alpha), Rational(n)));
    }
    for (const auto& [pair, count] : detail::meeting_pairs(c)) {
        const Rational& a1 = c.curve(pair.first).alpha;
        const Rational& a2 = c.curve(pair.second).alpha;
        if (a1 == 0 || a2 == 0) continue;
        e = field.add(e, field.scale(field.mul(factor(a1), factor(a2)), Rational(count)));
    }
    for (const auto& cur : c.curves) {
        if (cur.alpha != 0) continue;
        RootField::Elem prod = field.constant(1);
        for (const auto& n : c.neighbors(cur.id)) prod = field.mul(prod, factor(c.curve(n).alpha));
        e = field.add(e, field.scale(prod, Rational(-cur.self_int)));
    }
    return field.as_x_vector(e);
}

}  // namespace pvcalc
