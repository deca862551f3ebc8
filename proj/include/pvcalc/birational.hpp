#pragma once

/**
 * @file birational.hpp
 * @brief Point blow-ups and (-1)-curve contractions on configurations, and the
 *        change of E_X they cause.
 *
 * Blowing up P creates an exceptional curve E whose exponent is
 *   alpha_E = sum_l (alpha_l - 1) mult_P(C_l) + 2,
 * which on SNC data specializes to alpha_i + alpha_j (P = C_i n C_j),
 * alpha_i + 1 (P a free point of C_i) and 2 (P off D). Only these three
 * centre kinds are operations; tangential or triple-point situations live
 * pre-resolved inside the model builders.
 *
 * E_X is unchanged by a blow-up except when P lies on a curve C_i with
 * alpha_i = 0 whose two non-unit neighbours C_i1, C_i2 satisfy
 * alpha_i1 + alpha_i2 = 0, {alpha_i1, alpha_i2} != {-1, 1}, and P is on
 * neither of them. Then the change is (L-1)^2/((L^a1 - 1)(L^a2 - 1)) + L.
 */

#include "pvint.hpp"
#include "random.hpp"
#include "ring_elem.hpp"
#include "surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pvcalc {

struct BlowupCenter {
    enum class Kind { at_point, on_curve, free };

    Kind kind = Kind::free;
    std::string first;   // at_point: one curve; on_curve: the curve
    std::string second;  // at_point: the other curve
    int occurrence = 0;  // at_point: which of the points joining first/second
    std::string new_id;

    static BlowupCenter at_point(std::string c1, std::string c2, int occurrence, std::string new_id) {
        return {Kind::at_point, std::move(c1), std::move(c2), occurrence, std::move(new_id)};
    }
    static BlowupCenter on_curve(std::string c, std::string new_id) {
        return {Kind::on_curve, std::move(c), {}, 0, std::move(new_id)};
    }
    static BlowupCenter free_point(std::string new_id) { return {Kind::free, {}, {}, 0, std::move(new_id)}; }

    /// "point:C1/C2#0", "curve:C1" or "free".
    std::string str() const {
        switch (kind) {
            case Kind::at_point: return "point:" + first + "/" + second + "#" + std::to_string(occurrence);
            case Kind::on_curve: return "curve:" + first;
            case Kind::free: return "free";
        }
        return "?";
    }

    static BlowupCenter parse(const std::string& spec, std::string new_id) {
        if (spec == "free") return free_point(std::move(new_id));
        if (spec.rfind("curve:", 0) == 0) {
            std::string id = spec.substr(6);
            if (id.empty()) throw parse_error("empty curve id in centre '" + spec + "'");
            return on_curve(id, std::move(new_id));
        }
        if (spec.rfind("point:", 0) == 0) {
            std::string rest = spec.substr(6);
            auto slash = rest.find('/');
            if (slash == std::string::npos) throw parse_error("centre '" + spec + "' needs 'point:C1/C2[#k]'");
            std::string c1 = rest.substr(0, slash), c2 = rest.substr(slash + 1);
            int occ = 0;
            if (auto hash = c2.find('#'); hash != std::string::npos) {
                try {
                    occ = std::stoi(c2.substr(hash + 1));
                } catch (const std::exception&) {
                    throw parse_error("bad occurrence index in centre '" + spec + "'");
                }
                c2 = c2.substr(0, hash);
            }
            if (c1.empty() || c2.empty()) throw parse_error("empty curve id in centre '" + spec + "'");
            return at_point(c1, c2, occ, std::move(new_id));
        }
        throw parse_error("unknown centre '" + spec + "' (expected point:C1/C2#k, curve:C or free)");
    }
};

namespace detail {

inline void check_center(const Config& c, const BlowupCenter& center) {
    if (center.new_id.empty()) throw data_error("blow-up needs a non-empty id for the exceptional curve");
    if (c.find(center.new_id)) throw data_error("id '" + center.new_id + "' is already used");
    switch (center.kind) {
        case BlowupCenter::Kind::at_point:
            if (!c.find(center.first) || !c.find(center.second)) {
                throw data_error("centre " + center.str() + " references an unknown curve");
            }
            if (center.occurrence < 0 || center.occurrence >= c.meet_count(center.first, center.second)) {
                throw data_error("centre " + center.str() + ": no such intersection point");
            }
            break;
        case BlowupCenter::Kind::on_curve:
            if (!c.find(center.first)) throw data_error("centre " + center.str() + " references an unknown curve");
            break;
        case BlowupCenter::Kind::free: break;
    }
}

}  // namespace detail

/// Blow-up of a valid configuration; the exceptional curve joins the divisor.
inline Config blow_up(const Config& c, const BlowupCenter& center) {
    detail::require_valid(c);
    detail::check_center(c, center);
    Config out = c;
    out.ambient += HodgePoly::uv_power(1);
    Curve e{center.new_id, 0, -1, Rational(2), 0};
    switch (center.kind) {
        case BlowupCenter::Kind::at_point: {
            Curve& ci = out.curve(center.first);
            Curve& cj = out.curve(center.second);
            e.alpha = ci.alpha + cj.alpha;
            ci.self_int -= 1;
            cj.self_int -= 1;
            out.remove_point(center.first, center.second, center.occurrence);
            out.curves.push_back(e);
            out.add_point(e.id, center.first);
            out.add_point(e.id, center.second);
            break;
        }
        case BlowupCenter::Kind::on_curve: {
            Curve& ci = out.curve(center.first);
            e.alpha = ci.alpha + 1;
            ci.self_int -= 1;
            out.curves.push_back(e);
            out.add_point(e.id, center.first);
            break;
        }
        case BlowupCenter::Kind::free: out.curves.push_back(e); break;
    }
    return out;
}

/// The centre that blow_up would use on `contracted` to recreate `id`.
inline BlowupCenter contraction_center(const Config& c, const std::string& id) {
    auto nbrs = c.neighbors(id);
    if (nbrs.empty()) return BlowupCenter::free_point(id);
    if (nbrs.size() == 1) return BlowupCenter::on_curve(nbrs[0], id);
    return BlowupCenter::at_point(nbrs[0], nbrs[1], 0, id);
}

/// Contraction of a (-1)-curve meeting at most two other curves, each once,
/// whose exponent matches the blow-up rule for that neighbour pattern.
inline Config blow_down(const Config& c, const std::string& id) {
    detail::require_valid(c);
    const Curve& e = c.curve(id);
    if (e.genus != 0 || e.self_int != -1) {
        throw data_error("cannot contract " + id + ": not a smooth rational (-1)-curve");
    }
    auto nbrs = c.neighbors(id);
    if (nbrs.size() > 2) throw data_error("cannot contract " + id + ": it meets " + std::to_string(nbrs.size()) + " curves");
    Rational expected = 2;
    for (const auto& n : nbrs) {
        if (c.meet_count(id, n) != 1) throw data_error("cannot contract " + id + ": it meets " + n + " more than once");
    }
    if (nbrs.size() == 1) expected = c.curve(nbrs[0]).alpha + 1;
    if (nbrs.size() == 2) expected = c.curve(nbrs[0]).alpha + c.curve(nbrs[1]).alpha;
    if (e.alpha != expected) {
        throw data_error("cannot contract " + id + ": alpha is " + to_string(e.alpha) + " but the neighbour pattern forces " +
                         to_string(expected));
    }
    Config out = c;
    out.ambient -= HodgePoly::uv_power(1);
    for (const auto& n : nbrs) {
        out.curve(n).self_int += 1;
        out.remove_point(id, n);
    }
    if (nbrs.size() == 2) out.add_point(nbrs[0], nbrs[1]);
    out.curves.erase(std::find_if(out.curves.begin(), out.curves.end(), [&](const Curve& x) { return x.id == id; }));
    return out;
}

/// Pair of exponents (alpha_i1, alpha_i2) that makes `center` exceptional, if any.
inline std::optional<std::pair<Rational, Rational>> exceptional_pair(const Config& c, const BlowupCenter& center) {
    detail::check_center(c, center);
    std::vector<std::string> host;  // alpha = 0 curves carrying the centre
    switch (center.kind) {
        case BlowupCenter::Kind::free: return std::nullopt;
        case BlowupCenter::Kind::on_curve: host = {center.first}; break;
        case BlowupCenter::Kind::at_point: host = {center.first, center.second}; break;
    }
    for (const auto& hid : host) {
        const Curve& ci = c.curve(hid);
        if (ci.alpha != 0) continue;
        if (center.kind == BlowupCenter::Kind::at_point) {
            // The other branch through P must not be one of the pair, so it has alpha = 1.
            const std::string& other = hid == center.first ? center.second : center.first;
            if (c.curve(other).alpha != 1) continue;
        }
        std::vector<Rational> non_unit;
        std::vector<std::string> which;
        for (const auto& p : c.points) {
            if (!p.joins(hid)) continue;
            const Curve& o = c.curve(p.other(hid));
            if (o.alpha != 1) {
                non_unit.push_back(o.alpha);
                which.push_back(o.id);
            }
        }
        if (non_unit.size() != 2 || which[0] == which[1]) continue;
        const Rational &a1 = non_unit[0], &a2 = non_unit[1];
        if (a1 + a2 != 0) continue;
        if ((a1 == -1 && a2 == 1) || (a1 == 1 && a2 == -1)) continue;
        return std::pair{a1, a2};
    }
    return std::nullopt;
}

inline bool is_exceptional_center(const Config& c, const BlowupCenter& center) {
    return exceptional_pair(c, center).has_value();
}

/// (L-1)^2/((L^a1 - 1)(L^a2 - 1)) + L.
inline RingElem exceptional_difference(int d, const Rational& a1, const Rational& a2) {
    return lfactor(d, a1) * lfactor(d, a2) + lefschetz(d);
}

/// The change of E_X predicted for a blow-up, without recomputing E_X.
inline RingElem predicted_delta(const Config& c, const BlowupCenter& center) {
    auto pair = exceptional_pair(c, center);
    if (!pair) return RingElem(c.d);
    return exceptional_difference(c.d, pair->first, pair->second);
}

/// E_X(blow_up(c, center)) - E_X(c), computed from both sides.
inline RingElem invariance_delta(const Config& c, const BlowupCenter& center) {
    return e_invariant(blow_up(c, center)) - e_invariant(c);
}

/// Random centre on the divisor (an intersection point or a free point of a
/// curve); free points of the surface only if allow_free.
inline BlowupCenter random_center(const Config& c, Rng& rng, const std::string& new_id, bool allow_free = false) {
    std::int64_t slots = static_cast<std::int64_t>(c.points.size() + c.curves.size()) + (allow_free ? 1 : 0);
    if (slots == 0) throw generator_error("no centre available on an empty configuration");
    std::int64_t k = rng.uniform(0, slots - 1);
    if (k < static_cast<std::int64_t>(c.points.size())) {
        const Point& p = c.points[static_cast<std::size_t>(k)];
        int occ = 0;
        for (std::int64_t i = 0; i < k; ++i) {
            if (c.points[static_cast<std::size_t>(i)] == p) ++occ;
        }
        return BlowupCenter::at_point(p.a, p.b, occ, new_id);
    }
    k -= static_cast<std::int64_t>(c.points.size());
    if (k < static_cast<std::int64_t>(c.curves.size())) return BlowupCenter::on_curve(c.curves[static_cast<std::size_t>(k)].id, new_id);
    return BlowupCenter::free_point(new_id);
}

/// Inserts a curve with alpha = 1; its own adjunction defect must vanish.
inline Config add_unit_curve(const Config& c, const std::string& id, int genus, std::int64_t self_int,
                             const std::vector<std::string>& crossings) {
    if (id.empty() || c.find(id)) throw data_error("unit curve id '" + id + "' is empty or already used");
    Config out = c;
    out.curves.push_back(Curve{id, genus, self_int, Rational(1), 0});
    for (const auto& x : crossings) {
        if (!c.find(x)) throw data_error("unit curve crosses unknown curve '" + x + "'");
        out.add_point(id, x);
    }
    Rational def = adjunction_defect(out, id);
    if (def != 0) throw data_error("adjunction defect " + to_string(def) + " on new curve " + id);
    return out;
}

}  // namespace pvcalc
