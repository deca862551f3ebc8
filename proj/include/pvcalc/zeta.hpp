#pragma once

/**
 * @file zeta.hpp
 * @brief Candidate poles L^(nu_j/N_j) of the motivic zeta function of a
 *        function on a 3-fold, seen from one exceptional surface E_j.
 *
 * With alpha_i = nu_i - (nu_j/N_j) N_i for the components D_i = E_j n E_i,
 * the residue contribution
 *   R_{E_j} = sum_{j in I} [E_I^o] prod_{i in I \ j} (L-1)/(L^alpha_i - 1)
 * is E_X of the configuration (E_j, sum D_i) with d = N_j. It can also be
 * reached from the stratified zeta formula
 *   L^-(n+1) sum_I [E_I^o] prod_{i in I} (L-1) T^N_i / (L^nu_i - T^N_i)
 * by multiplying with (L^nu_j - T^N_j) and putting T = L^(nu_j/N_j); that
 * route is kept separate so the two can be compared.
 *
 * Only the surface-side data is modelled. 3-fold resolutions are not built;
 * stratum classes are whatever the caller supplies.
 */

#include "birational.hpp"
#include "pvint.hpp"
#include "random.hpp"
#include "surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pvcalc {

struct Component {
    std::string id;
    int genus = 0;
    std::int64_t self_int = 0;
    std::int64_t N = 1;
    std::int64_t nu = 1;
    Integer trace = 0;
};

enum class Creation { point, rational_curve, nonrational_curve };

inline const char* creation_name(Creation c) {
    switch (c) {
        case Creation::point: return "point";
        case Creation::rational_curve: return "rational_curve";
        case Creation::nonrational_curve: return "nonrational_curve";
    }
    return "?";
}

struct SurfaceResolutionDatum {
    std::int64_t nj = 1;
    std::int64_t vj = 1;
    HodgePoly surface;
    int base_genus = 0;
    Integer base_trace = 0;
    std::vector<Component> components;
    std::vector<Point> points;
    Creation creation = Creation::point;
    int creation_genus = 0;  // genus of the blown-up curve for nonrational_curve
};

/// E_j = P^2 meeting three general lines with (N, nu) = (1, 1), (1, 1), (4, 1),
/// (N_j, nu_j) = (2, 1): alphas 1/2, 1/2, -1.
inline SurfaceResolutionDatum triangle_of_lines_datum() {
    SurfaceResolutionDatum z;
    z.nj = 2;
    z.vj = 1;
    z.surface = HodgePoly::plane();
    z.components = {{"D1", 0, 1, 1, 1, 0}, {"D2", 0, 1, 1, 1, 0}, {"D3", 0, 1, 4, 1, 0}};
    z.points = {Point("D1", "D2"), Point("D1", "D3"), Point("D2", "D3")};
    return z;
}

/// alpha_i = nu_i - (nu_j/N_j) N_i for every component; each must be nonzero.
inline std::map<std::string, Rational> alphas_from_numerical(const SurfaceResolutionDatum& z) {
    if (z.nj < 1 || z.vj < 1) throw data_error("N_j and nu_j must be positive");
    std::map<std::string, Rational> out;
    for (const auto& comp : z.components) {
        if (comp.N < 1 || comp.nu < 1) throw data_error("N and nu of " + comp.id + " must be positive");
        Rational a = Rational(comp.nu) - Rational(z.vj * comp.N, z.nj);
        if (a == 0) {
            throw data_error("alpha_i = 0 for " + comp.id + ": nu/N = " + std::to_string(comp.nu) + "/" +
                             std::to_string(comp.N) + " equals nu_j/N_j (genericity fails)");
        }
        if (!out.emplace(comp.id, a).second) throw data_error("duplicate component id '" + comp.id + "'");
    }
    return out;
}

/// The configuration (E_j, sum D_i) with d = N_j.
inline Config surface_config(const SurfaceResolutionDatum& z) {
    auto alphas = alphas_from_numerical(z);
    Config c;
    c.d = static_cast<int>(z.nj);
    c.ambient = z.surface;
    c.base_genus = z.base_genus;
    c.base_trace = z.base_trace;
    for (const auto& comp : z.components) c.curves.push_back(Curve{comp.id, comp.genus, comp.self_int, alphas.at(comp.id), comp.trace});
    for (const auto& p : z.points) c.add_point(p.a, p.b);
    c.sort_curves();
    return c;
}

/// R_{E_j}, computed as E_X of surface_config.
inline RingElem residue_contribution(const SurfaceResolutionDatum& z) { return e_invariant(surface_config(z)); }

/// sum chi(E_I^o) prod 1/alpha_i, straight from the datum.
inline Rational topological_residue(const SurfaceResolutionDatum& z) {
    auto alphas = alphas_from_numerical(z);
    std::map<std::string, int> on;
    std::map<std::pair<std::string, std::string>, int> pairs;
    for (const auto& p : z.points) {
        ++on[p.a];
        ++on[p.b];
        ++pairs[{p.a, p.b}];
    }
    Integer chi_open = z.surface.euler() + static_cast<long long>(z.points.size());
    Rational r = 0;
    for (const auto& comp : z.components) {
        chi_open -= 2 - 2 * comp.genus;
        r += Rational(2 - 2 * comp.genus - on[comp.id]) / alphas.at(comp.id);
    }
    r += Rational(chi_open);
    for (const auto& [pr, n] : pairs) r += Rational(n) / (alphas.at(pr.first) * alphas.at(pr.second));
    return r;
}

struct Stratum {
    std::vector<std::string> ids;  // sorted
    HodgePoly cls;
};

struct ZMotDatum {
    int n = 2;
    std::vector<Stratum> strata;
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> numerical;  // id -> (N, nu)
};

/// One term [E_I^o] prod_{i in I} (L-1) T^N_i / (L^nu_i - T^N_i), left unexpanded.
struct ZetaTerm {
    std::vector<std::string> ids;
    HodgePoly cls;
    std::vector<std::pair<std::int64_t, std::int64_t>> factors;  // (N_i, nu_i), parallel to ids
};

/// The strata of the zeta formula that contain j.
inline std::vector<ZetaTerm> zmot_contribution(const ZMotDatum& z, const std::string& j) {
    if (!z.numerical.count(j)) throw data_error("unknown component '" + j + "'");
    std::vector<ZetaTerm> out;
    for (const auto& s : z.strata) {
        if (std::find(s.ids.begin(), s.ids.end(), j) == s.ids.end()) continue;
        ZetaTerm t{s.ids, s.cls, {}};
        for (const auto& id : s.ids) {
            auto it = z.numerical.find(id);
            if (it == z.numerical.end()) throw data_error("stratum references unknown component '" + id + "'");
            t.factors.push_back(it->second);
        }
        out.push_back(std::move(t));
    }
    if (out.empty()) throw data_error("component '" + j + "' lies in no stratum");
    return out;
}

/// Strata of the 3-fold near E_j as seen from the surface datum: {j} has class
/// [E_j^o], {j, i} has class [D_i^o], {j, i, k} is a set of points.
inline ZMotDatum to_zmot(const SurfaceResolutionDatum& z, const std::string& j = "E") {
    Config c = surface_config(z);
    ZMotDatum out;
    out.n = 2;
    out.numerical[j] = {z.nj, z.vj};
    for (const auto& comp : z.components) {
        if (comp.id == j) throw data_error("component id '" + j + "' clashes with the surface itself");
        out.numerical[comp.id] = {comp.N, comp.nu};
    }
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    out.strata.push_back({{j}, stratum_class(c, {})});
    for (const auto& cur : c.curves) out.strata.push_back({sorted({j, cur.id}), stratum_class(c, {cur.id})});
    for (const auto& [pair, count] : detail::meeting_pairs(c)) {
        out.strata.push_back({sorted({j, pair.first, pair.second}), HodgePoly(Integer(count))});
    }
    return out;
}

/**
 * (L^nu_j - T^N_j) times the terms, at T = L^(nu_j/N_j), in A_d.
 * d must be a multiple of N_j, so that T^N_i = w^(nu_j N_i d / N_j).
 */
inline RingElem residue_via_substitution(const std::vector<ZetaTerm>& terms, const std::string& j, std::int64_t nj,
                                         std::int64_t vj, int n, int d) {
    if (nj < 1 || vj < 1) throw data_error("N_j and nu_j must be positive");
    if (d < 1 || d % nj != 0) throw context_error("working denominator " + std::to_string(d) + " is not a multiple of N_j");
    const std::int64_t scale = d / nj;
    const RingElem lminus1 = lefschetz(d) - RingElem(d, 1);
    RingElem sum(d);
    for (const auto& t : terms) {
        bool has_j = false;
        RingElem prod = RingElem::from_hodge(d, t.cls);
        for (std::size_t k = 0; k < t.ids.size(); ++k) {
            auto [N, nu] = t.factors[k];
            if (t.ids[k] == j) {
                // (L-1) T^N_j, the pole factor having been cleared
                has_j = true;
                prod *= lminus1 * RingElem::w_power(d, vj * d);
                continue;
            }
            std::int64_t lexp = nu * d;             // L^nu_i
            std::int64_t texp = vj * N * scale;     // T^N_i
            if (lexp == texp) throw data_error("alpha_i = 0 for " + t.ids[k] + " (genericity fails)");
            prod *= lminus1 * RingElem::w_power(d, texp) * RingElem::inverse_binomial(d, lexp, texp);
        }
        if (!has_j) throw data_error("term without the component " + j);
        sum += prod;
    }
    return lpow(d, Rational(-(n + 1))) * sum;
}

/// Same, with the numerical data of j taken from the datum.
inline RingElem residue_via_substitution(const ZMotDatum& z, const std::string& j, int d) {
    auto it = z.numerical.find(j);
    if (it == z.numerical.end()) throw data_error("unknown component '" + j + "'");
    return residue_via_substitution(zmot_contribution(z, j), j, it->second.first, it->second.second, z.n, d);
}

/// L^-(n+1) (L-1) L^nu_j: the unit relating the two residue routes.
inline RingElem residue_unit(int d, std::int64_t vj, int n = 2) {
    return lpow(d, Rational(-(n + 1))) * (lefschetz(d) - RingElem(d, 1)) * lpow(d, Rational(vj));
}

enum class Expectation { vanish, none };

struct PoleVerdict {
    Expectation expectation = Expectation::none;
    std::string reason;
};

/// What the cancellation results predict for this datum, from chi(E_j^o),
/// connectivity and how E_j was created.
inline PoleVerdict expected_residue(const SurfaceResolutionDatum& z, const Config& c) {
    Integer chi = euler_complement(c);
    if (chi > 0) return {Expectation::none, "chi(E_j^o) = " + chi.str() + " > 0"};
    switch (z.creation) {
        case Creation::point: return {Expectation::vanish, "E_j created by blowing up a point, chi <= 0"};
        case Creation::rational_curve:
            if (is_connected(c)) return {Expectation::vanish, "E_j created by blowing up a rational curve, chi <= 0, connected"};
            return {Expectation::none, "E_j created by blowing up a rational curve but the configuration is not connected"};
        case Creation::nonrational_curve:
            if (z.creation_genus >= 1) {
                return {Expectation::vanish, "E_j created by blowing up a curve of genus " + std::to_string(z.creation_genus) +
                                                 ", chi <= 0"};
            }
            return {Expectation::none, "nonrational_curve creation needs a genus >= 1"};
    }
    return {};
}

struct PoleReport {
    Report report;
    std::map<std::string, Rational> alphas;
    std::optional<RingElem> residue;
    Integer chi = 0;
    bool connected = false;
    PoleVerdict verdict;
};

/// chi(E_j^o), connectivity, R_{E_j} and the predicted verdict. A predicted
/// zero that does not come out as zero is an error finding.
inline PoleReport pole_report(const SurfaceResolutionDatum& z) {
    PoleReport out;
    try {
        out.alphas = alphas_from_numerical(z);
    } catch (const data_error& e) {
        out.report.add(Severity::error, "genericity", e.what());
        return out;
    }
    Config c = surface_config(z);
    Report v = validate(c);
    for (const auto& f : v.findings) {
        if (f.severity != Severity::info) out.report.findings.push_back(f);
    }
    if (!v.ok()) return out;
    out.chi = euler_complement(c);
    out.connected = is_connected(c);
    out.report.add(Severity::info, "chi", "chi(E_j^o) = " + out.chi.str());
    out.report.add(Severity::info, out.connected ? "connected" : "disconnected",
                   out.connected ? "intersection configuration is connected" : "intersection configuration is not connected");
    out.residue = e_invariant(c);
    out.verdict = expected_residue(z, c);
    const bool zero = out.residue->is_zero();
    if (out.verdict.expectation == Expectation::vanish) {
        if (zero) out.report.add(Severity::info, "cancellation", "R = 0 as predicted (" + out.verdict.reason + ")");
        else out.report.add(Severity::error, "mismatch", "R != 0 although a zero is predicted (" + out.verdict.reason + ")");
    } else {
        out.report.add(Severity::info, "no-expectation",
                       std::string("no expectation (") + out.verdict.reason + "); R " + (zero ? "= 0" : "!= 0"));
    }
    return out;
}

struct DatumParams {
    int max_nj = 6;
    int max_n = 6;
    int max_blowups = 6;
    int attempts = 500;
};

namespace detail {

/// Smallest N in [1, 200] with nu = (k + vj N)/nj a positive integer, i.e.
/// nu - (vj/nj) N = k/nj.
inline std::optional<std::pair<std::int64_t, std::int64_t>> numerical_for(std::int64_t k, std::int64_t nj, std::int64_t vj,
                                                                         Rng& rng) {
    std::int64_t start = rng.uniform(1, 8);
    for (std::int64_t N = start; N <= 200; ++N) {
        std::int64_t top = k + vj * N;
        if (top > 0 && top % nj == 0) return std::pair{N, top / nj};
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * A point-created E_j: P^2 with three general lines whose alphas sum to 0,
 * followed by point blow-ups on E_j coming from blowing up curves of the
 * 3-fold. A curve E_i n E_k meeting E_j gives a component with
 * (N_i + N_k, nu_i + nu_k); a curve inside E_i only gives (N_i, nu_i + 1).
 * Centres giving alpha = 0 are skipped.
 */
inline SurfaceResolutionDatum random_datum(std::uint64_t seed, const DatumParams& p = {}) {
    Rng rng(seed);
    for (int attempt = 0; attempt < p.attempts; ++attempt) {
        SurfaceResolutionDatum z;
        z.nj = rng.uniform(1, p.max_nj);
        z.vj = rng.uniform(1, p.max_nj + 2);
        z.surface = HodgePoly::plane();
        z.creation = Creation::point;
        std::vector<Component> lines;
        std::int64_t ksum = 0;
        bool ok = true;
        for (int i = 0; i < 2; ++i) {
            std::int64_t N = rng.uniform(1, p.max_n), nu = rng.uniform(1, p.max_n);
            lines.push_back({"D" + std::to_string(i + 1), 0, 1, N, nu, 0});
            ksum += nu * z.nj - z.vj * N;
        }
        auto third = detail::numerical_for(-ksum, z.nj, z.vj, rng);
        if (!third) continue;
        lines.push_back({"D3", 0, 1, third->first, third->second, 0});
        for (const auto& l : lines) {
            if (l.nu * z.nj == z.vj * l.N) ok = false;
        }
        if (!ok) continue;
        z.components = lines;
        z.points = {Point("D1", "D2"), Point("D1", "D3"), Point("D2", "D3")};

        std::int64_t n = rng.uniform(0, p.max_blowups);
        for (std::int64_t b = 0; b < n; ++b) {
            Config c = surface_config(z);
            BlowupCenter center = random_center(c, rng, "D" + std::to_string(z.components.size() + 1));
            auto num = [&](const std::string& id) -> const Component& {
                for (const auto& comp : z.components)
                    if (comp.id == id) return comp;
                throw generator_error("lost component " + id);
            };
            Component fresh{center.new_id, 0, -1, 0, 0, 0};
            if (center.kind == BlowupCenter::Kind::at_point) {
                fresh.N = num(center.first).N + num(center.second).N;
                fresh.nu = num(center.first).nu + num(center.second).nu;
            } else {
                fresh.N = num(center.first).N;
                fresh.nu = num(center.first).nu + 1;
            }
            if (fresh.nu * z.nj == z.vj * fresh.N) continue;
            Config next = blow_up(c, center);
            SurfaceResolutionDatum nz = z;
            nz.surface = next.ambient;
            for (auto& comp : nz.components) comp.self_int = next.curve(comp.id).self_int;
            nz.components.push_back(fresh);
            nz.points = next.points;
            z = std::move(nz);
        }
        return z;
    }
    throw generator_error("no resolution datum produced for seed " + std::to_string(seed));
}

}  // namespace pvcalc
