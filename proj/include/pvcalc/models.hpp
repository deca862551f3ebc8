#pragma once

/**
 * @file models.hpp
 * @brief Builders for the configurations on Hirzebruch surfaces that the
 *        structure theorem reduces to, the conic on P^2, the scripted
 *        conic-to-Hirzebruch pipeline, and a seeded generator.
 *
 * Case (a): a section C_1 with alpha = -1 and C_1.C_1 = -e plus m >= 2 fibres.
 * Case (b): disjoint sections with alphas a, -a and self-intersections -e, e,
 *           plus m >= 1 fibres.
 * Case (c): a bisection C with alpha = 0, tangent to two fibres. Stored after
 *           resolving both tangencies, so it is SNC: on the blown-up surface
 *           C.C = 0, each tangent fibre has become a (-1)-curve C_i meeting C
 *           once and two (-2)-curves C_i', C_i'' with alpha (alpha_i + 1)/2.
 */

#include "birational.hpp"
#include "pvint.hpp"
#include "random.hpp"
#include "surface.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace pvcalc {

namespace detail {

inline int lift_d(int d, const Rational& a) {
    std::int64_t den = static_cast<std::int64_t>(denominator(a));
    return static_cast<int>(std::lcm(static_cast<std::int64_t>(d), den));
}

inline Config finish(Config c, const char* what) {
    c.sort_curves();
    Report r = validate(c);
    if (!r.ok()) {
        std::string msg = std::string(what) + " is not a valid allowed configuration:";
        for (const auto& f : r.findings) {
            if (f.severity == Severity::error) msg += "\n  " + f.message;
        }
        throw data_error(msg);
    }
    return c;
}

inline std::string fibre_id(std::size_t i) { return "F" + std::to_string(i + 1); }

}  // namespace detail

/// Section S (alpha = -1, self -e) and fibres F1..Fm with the given alphas.
inline Config hirzebruch_case_a(int e, const std::vector<Rational>& fibre_alphas, int d) {
    if (e < 0) throw data_error("case (a): e must be >= 0");
    if (d < 1) throw data_error("case (a): d must be >= 1");
    const auto m = static_cast<std::int64_t>(fibre_alphas.size());
    if (m < 2) throw data_error("case (a) needs at least 2 fibres, got " + std::to_string(m));
    Rational sum = std::accumulate(fibre_alphas.begin(), fibre_alphas.end(), Rational(0));
    if (sum != Rational(m - 2 - e)) {
        throw data_error("case (a): fibre alphas must sum to m - 2 - e = " + std::to_string(m - 2 - e) + ", got " +
                         to_string(sum));
    }
    Config c;
    c.d = d;
    c.ambient = HodgePoly::ruled(0);
    c.curves.push_back(Curve{"S", 0, -e, Rational(-1), 0});
    for (std::size_t i = 0; i < fibre_alphas.size(); ++i) {
        c.curves.push_back(Curve{detail::fibre_id(i), 0, 0, fibre_alphas[i], 0});
        c.add_point("S", detail::fibre_id(i));
    }
    return detail::finish(std::move(c), "case (a)");
}

/// Sections S1 (alpha1, self -e), S2 (-alpha1, self e) and fibres crossing both.
inline Config hirzebruch_case_b(int e, const Rational& alpha1, const std::vector<Rational>& fibre_alphas, int d) {
    if (e < 0) throw data_error("case (b): e must be >= 0");
    if (d < 1) throw data_error("case (b): d must be >= 1");
    const auto m = static_cast<std::int64_t>(fibre_alphas.size());
    if (m < 1) throw data_error("case (b) needs at least 1 fibre");
    Rational sum = std::accumulate(fibre_alphas.begin(), fibre_alphas.end(), Rational(0));
    Rational want = Rational(m - 2) + alpha1 * e;
    if (sum != want) {
        throw data_error("case (b): fibre alphas must sum to m - 2 + alpha1*e = " + to_string(want) + ", got " + to_string(sum));
    }
    Config c;
    c.d = d;
    c.ambient = HodgePoly::ruled(0);
    c.curves.push_back(Curve{"S1", 0, -e, alpha1, 0});
    c.curves.push_back(Curve{"S2", 0, e, -alpha1, 0});
    for (std::size_t i = 0; i < fibre_alphas.size(); ++i) {
        c.curves.push_back(Curve{detail::fibre_id(i), 0, 0, fibre_alphas[i], 0});
        c.add_point("S1", detail::fibre_id(i));
        c.add_point("S2", detail::fibre_id(i));
    }
    return detail::finish(std::move(c), "case (b)");
}

/// Resolved bisection configuration. d is raised to a multiple of the
/// denominators of alpha1 and (alpha1 + 1)/2 when needed.
inline Config case_c_resolved(const Rational& alpha1, int extra_fibres, int d, int genus = 0) {
    if (genus != 0) throw data_error("case (c): only a rational bisection is supported (genus " + std::to_string(genus) + ")");
    if (alpha1 == 0) throw data_error("case (c): alpha1 must be nonzero");
    if (extra_fibres < 0) throw data_error("case (c): extra_fibres must be >= 0");
    if (d < 1) throw data_error("case (c): d must be >= 1");
    const Rational alpha2 = -alpha1;
    const Rational a1p = (alpha1 + 1) / 2, a2p = (alpha2 + 1) / 2;
    d = detail::lift_d(detail::lift_d(detail::lift_d(d, alpha1), a1p), a2p);

    Config c;
    c.d = d;
    // Hirzebruch surface blown up twice at each of the two tangency points.
    c.ambient = HodgePoly::ruled(0) + HodgePoly::uv_power(1) * HodgePoly(4);
    c.curves.push_back(Curve{"C", 0, 0, Rational(0), 0});
    c.curves.push_back(Curve{"C1", 0, -1, alpha1, 0});
    c.curves.push_back(Curve{"C2", 0, -1, alpha2, 0});
    c.curves.push_back(Curve{"C1a", 0, -2, a1p, 0});
    c.curves.push_back(Curve{"C1b", 0, -2, a1p, 0});
    c.curves.push_back(Curve{"C2a", 0, -2, a2p, 0});
    c.curves.push_back(Curve{"C2b", 0, -2, a2p, 0});
    c.add_point("C", "C1");
    c.add_point("C", "C2");
    for (const char* x : {"C1a", "C1b"}) c.add_point("C1", x);
    for (const char* x : {"C2a", "C2b"}) c.add_point("C2", x);
    for (int i = 0; i < extra_fibres; ++i) {
        std::string id = detail::fibre_id(static_cast<std::size_t>(i));
        c.curves.push_back(Curve{id, 0, 0, Rational(1), 0});
        c.add_point("C", id);
        c.add_point("C", id);
    }
    return detail::finish(std::move(c), "case (c)");
}

/// P^2 with a smooth conic B, alpha = -1/2.
inline Config plane_conic(int d = 2) {
    if (d < 1 || d % 2 != 0) throw data_error("plane conic needs an even d (alpha = -1/2), got " + std::to_string(d));
    Config c;
    c.d = d;
    c.ambient = HodgePoly::plane();
    c.curves.push_back(Curve{"B", 0, 4, Rational(-1, 2), 0});
    return detail::finish(std::move(c), "plane conic");
}

/// P^2 with three lines in general position; adjunction asks for alphas summing to 0.
inline Config plane_triangle(const Rational& a1, const Rational& a2, const Rational& a3, int d) {
    Config c;
    c.d = d;
    c.ambient = HodgePoly::plane();
    c.curves = {Curve{"L1", 0, 1, a1, 0}, Curve{"L2", 0, 1, a2, 0}, Curve{"L3", 0, 1, a3, 0}};
    c.add_point("L1", "L2");
    c.add_point("L1", "L3");
    c.add_point("L2", "L3");
    return c;
}

struct PipelineStep {
    std::string label;
    Config config;
    RingElem invariant;
    RingElem delta;      // invariant minus the previous step's invariant
    RingElem predicted;  // what the birational rules predict for delta
    bool exceptional = false;
};

/**
 * Conic B plus a tangent line l at P, carried to a Hirzebruch surface:
 *   1. blow up P on B                         (E1, alpha 1/2)
 *   2. blow up B n E1, which separates l       (E2, alpha 0)
 *   3. l is now SNC with D: add it with alpha 1
 *   4. contract l                             (exceptional: l came from a free point of E2)
 *   5. blow up E1 n E2                        (E3, alpha 1/2)
 *   6. contract E2
 * The result is case (b) with e = 3, sections E1, B and the single fibre E3.
 */
inline std::vector<PipelineStep> conic_pipeline_demo() {
    std::vector<PipelineStep> steps;
    auto push = [&](std::string label, Config c, RingElem predicted, bool exceptional) {
        RingElem inv = e_invariant(c);
        RingElem delta = steps.empty() ? RingElem(c.d) : inv - steps.back().invariant;
        steps.push_back({std::move(label), std::move(c), inv, delta, std::move(predicted), exceptional});
    };
    auto up = [&](const BlowupCenter& center) {
        const Config& prev = steps.back().config;
        push("blow up " + center.str() + " -> " + center.new_id, blow_up(prev, center), predicted_delta(prev, center),
             is_exceptional_center(prev, center));
    };
    auto down = [&](const std::string& id) {
        const Config& prev = steps.back().config;
        Config next = blow_down(prev, id);
        BlowupCenter back = contraction_center(prev, id);
        push("contract " + id, next, -predicted_delta(next, back), is_exceptional_center(next, back));
    };

    Config start = plane_conic(2);
    push("conic B on P^2", start, RingElem(2), false);
    up(BlowupCenter::on_curve("B", "E1"));
    up(BlowupCenter::at_point("B", "E1", 0, "E2"));
    push("add tangent line l (alpha 1)", add_unit_curve(steps.back().config, "l", 0, -1, {"E2"}), RingElem(2), false);
    down("l");
    up(BlowupCenter::at_point("E1", "E2", 0, "E3"));
    down("E2");
    for (auto& s : steps) s.config.sort_curves();
    return steps;
}

struct GeneratorParams {
    int max_e = 3;
    int max_m = 4;
    int max_den = 4;
    int max_blowups = 10;
    int extra_fibres = 2;  // case (c) bound
    bool skip_exceptional = true;
    int attempts = 200;
};

namespace detail {

/// m fractions with denominators dividing den that sum to target.
inline std::vector<Rational> fibres_summing_to(Rng& rng, std::int64_t m, const Rational& target, int den) {
    std::vector<Rational> out;
    Rational sum = 0;
    for (std::int64_t i = 0; i + 1 < m; ++i) {
        Rational a(rng.uniform(-2 * den, 2 * den), den);
        out.push_back(a);
        sum += a;
    }
    out.push_back(target - sum);
    return out;
}

inline Config random_base(Rng& rng, const GeneratorParams& p) {
    int kind = static_cast<int>(rng.uniform(0, 2));
    int den = static_cast<int>(rng.uniform(1, p.max_den));
    int e = static_cast<int>(rng.uniform(0, p.max_e));
    if (kind == 0) {
        std::int64_t m = rng.uniform(2, std::max(2, p.max_m));
        return hirzebruch_case_a(e, fibres_summing_to(rng, m, Rational(m - 2 - e), den), den);
    }
    if (kind == 1) {
        std::int64_t m = rng.uniform(1, std::max(1, p.max_m));
        Rational a1(rng.uniform(-2 * den, 2 * den), den);
        int d = lift_d(den, a1);
        return hirzebruch_case_b(e, a1, fibres_summing_to(rng, m, Rational(m - 2) + a1 * e, den), d);
    }
    Rational a1(rng.uniform(1, 2 * den), den);
    if (rng.coin()) a1 = -a1;
    return case_c_resolved(a1, static_cast<int>(rng.uniform(0, p.extra_fibres)), den);
}

}  // namespace detail

/// Deterministic from the seed: a case (a)/(b)/(c) instance followed by up to
/// max_blowups blow-ups with centres on the divisor. Exceptional centres are
/// skipped when skip_exceptional is set.
inline Config random_config(std::uint64_t seed, const GeneratorParams& p = {}) {
    Rng rng(seed);
    for (int attempt = 0; attempt < p.attempts; ++attempt) {
        Config c;
        try {
            c = detail::random_base(rng, p);
        } catch (const data_error&) {
            continue;  // fibre draw violated allowedness; redraw
        }
        std::int64_t n = rng.uniform(0, p.max_blowups);
        for (std::int64_t i = 0; i < n; ++i) {
            BlowupCenter center = random_center(c, rng, "E" + std::to_string(i + 1));
            if (p.skip_exceptional && is_exceptional_center(c, center)) continue;
            c = blow_up(c, center);
        }
        c.sort_curves();
        if (validate(c).ok() && is_connected(c) && euler_complement(c) <= 0) return c;
    }
    throw generator_error("no configuration produced for seed " + std::to_string(seed) + " after " +
                          std::to_string(p.attempts) + " attempts");
}

}  // namespace pvcalc
