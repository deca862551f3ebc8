#pragma once

// Shared oracles and generators for the test suites.

#include "pvcalc/pvcalc.hpp"

#include <string>
#include <vector>

namespace pvtest {

using namespace pvcalc;

inline Rational rpow(const Rational& t, std::int64_t k) {
    Rational out = 1;
    Rational base = k >= 0 ? t : Rational(1) / t;
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) out *= base;
    return out;
}

/// Image of x under u -> t^d, v -> 1, w -> t, read straight off the stored
/// numerator and denominator (no use of the library's evaluators).
inline Rational eval_at(const RingElem& x, const Rational& t) {
    const int d = x.d();
    Rational num = 0;
    for (const auto& [key, poly] : x.numerator()) {
        Rational p = 0;
        for (std::size_t i = 0; i < poly.coeffs().size(); ++i) p += Rational(poly.coeffs()[i]) * rpow(t, static_cast<std::int64_t>(i));
        num += p * (key > 0 ? rpow(t, static_cast<std::int64_t>(d) * key) : Rational(1));
    }
    Rational den = rpow(t, x.denom_w_power());
    for (const auto& [e, c] : x.denom_cyclotomic()) {
        Rational phi = 0;
        const WPoly ce = cyclotomic(e);
        for (std::size_t i = 0; i < ce.coeffs().size(); ++i) phi += Rational(ce.coeffs()[i]) * rpow(t, static_cast<std::int64_t>(i));
        den *= rpow(phi, c);
    }
    return num / den;
}

/// (t^d - 1)/(t^(a d) - 1), the image of lfactor(a) under the same substitution.
inline Rational lfactor_at(int d, const Rational& a, const Rational& t) {
    std::int64_t k = scaled_exponent(a, d);
    return (rpow(t, d) - 1) / (rpow(t, k) - 1);
}

/// w^k as an explicit element, built from parts.
inline RingElem wmono(int d, std::int64_t k) { return RingElem::w_power(d, k); }

/// c0 + c1 w + c2 w^2 + ... with no denominator.
inline RingElem wpoly(int d, std::vector<long long> coeffs) {
    RingElem out(d);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) out += Integer(coeffs[i]) * wmono(d, static_cast<std::int64_t>(i));
    }
    return out;
}

/// Random element: sums of integer multiples of products of L-powers,
/// lfactors and Hodge monomials (including u, v individually).
inline RingElem random_elem(Rng& rng, int d, bool chi_domain = false) {
    RingElem out(d);
    std::int64_t terms = rng.uniform(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) {
        RingElem prod(d, Integer(rng.uniform(-3, 3)));
        prod *= lpow(d, Rational(rng.uniform(-2 * d, 2 * d), d));
        std::int64_t f = rng.uniform(0, 2);
        for (std::int64_t i = 0; i < f; ++i) {
            std::int64_t k = rng.uniform(1, 2 * d);
            if (rng.coin()) k = -k;
            prod *= lfactor(d, Rational(k, d));
        }
        if (!chi_domain && rng.coin()) {
            HodgePoly h = HodgePoly::monomial(static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(0, 2)));
            prod *= RingElem::from_hodge(d, h);
        }
        out += prod;
    }
    return out;
}

/// Valid configurations with generally nonzero invariants: generator output
/// with exceptional centres allowed, triangles and conics on P^2, followed by
/// blow-ups anywhere (free points included).
inline Config random_valid_config(std::uint64_t seed) {
    Rng rng(seed * 7919 + 13);
    Config c;
    switch (rng.uniform(0, 2)) {
        case 0: {
            GeneratorParams p;
            p.skip_exceptional = false;
            p.max_blowups = 4;
            c = random_config(seed, p);
            break;
        }
        case 1: {
            int den = static_cast<int>(rng.uniform(1, 4));
            Rational a1(rng.uniform(-2 * den, 2 * den), den), a2(rng.uniform(-2 * den, 2 * den), den);
            c = plane_triangle(a1, a2, -a1 - a2, den);
            if (!validate(c).ok()) c = plane_triangle(Rational(1, 2), Rational(1, 2), Rational(-1), 2);
            break;
        }
        default: c = plane_conic(2 * static_cast<int>(rng.uniform(1, 2))); break;
    }
    std::int64_t n = rng.uniform(0, 4);
    for (std::int64_t i = 0; i < n; ++i) {
        BlowupCenter center = random_center(c, rng, "X" + std::to_string(i + 1), true);
        c = blow_up(c, center);
    }
    c.sort_curves();
    return c;
}

inline bool all_rational(const Config& c) {
    return c.base_genus == 0 && std::all_of(c.curves.begin(), c.curves.end(), [](const Curve& x) { return x.genus == 0; });
}

/// The pre-blow-up centre choice of the Lemma-style fuzz: any centre
/// including free points of the surface.
inline std::pair<Config, BlowupCenter> random_pair(std::uint64_t seed) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Config c = random_valid_config(seed);
    return {c, random_center(c, rng, "P", true)};
}

/// A resolution datum whose surface configuration is a random valid config
/// without alpha = 0 curves: N_j = d, nu_j coprime to d, and for each curve
/// the smallest N with nu = alpha + nu_j N / N_j a positive integer. R is
/// usually nonzero.
inline SurfaceResolutionDatum random_paired_datum(std::uint64_t seed) {
    for (std::uint64_t s = seed * 31 + 5;; ++s) {
        Config c = random_valid_config(s);
        if (std::any_of(c.curves.begin(), c.curves.end(), [](const Curve& x) { return x.alpha == 0; })) continue;
        Rng rng(s);
        SurfaceResolutionDatum z;
        z.nj = c.d;
        z.vj = 1 + c.d * rng.uniform(0, 2);
        z.surface = c.ambient;
        z.base_genus = c.base_genus;
        z.base_trace = c.base_trace;
        z.creation = Creation::point;
        for (const auto& cur : c.curves) {
            for (std::int64_t N = 1;; ++N) {
                Rational nu = cur.alpha + Rational(z.vj * N) / z.nj;
                if (nu > 0 && is_integral(nu)) {
                    z.components.push_back({cur.id, cur.genus, cur.self_int, N, static_cast<std::int64_t>(numerator(nu)), cur.trace});
                    break;
                }
            }
        }
        z.points = c.points;
        return z;
    }
}

}  // namespace pvtest
