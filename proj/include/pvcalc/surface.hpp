#pragma once

/**
 * @file surface.hpp
 * @brief Decorated curve configurations on a smooth projective surface: a
 *        simple normal crossings divisor D = C_1 + ... + C_k together with the
 *        exponents alpha_i of a multi-valued form, div w^(1/d) = sum (alpha_i - 1) C_i.
 *
 * Only SNC data is representable: smooth components, transverse pairwise
 * intersections, no triple points. Two components may meet in several
 * points; each stored point is one transverse intersection. The ambient
 * surface enters only through its Hodge polynomial.
 *
 * Not checked: the absence of (-1)-curves disjoint from D, which the
 * vanishing statements for rational surfaces assume.
 */

#include "hodge_poly.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pvcalc {

struct Curve {
    std::string id;
    int genus = 0;
    std::int64_t self_int = 0;
    Rational alpha = 1;
    /// Frobenius trace a_C for point counts (#C(F_q) = q + 1 - a_C); ignored for genus 0.
    Integer trace = 0;
};

/// One transverse intersection point between two distinct curves.
struct Point {
    std::string a, b;  // a < b

    Point() = default;
    Point(std::string x, std::string y) : a(std::move(x)), b(std::move(y)) {
        if (b < a) std::swap(a, b);
    }
    bool joins(const std::string& x) const { return a == x || b == x; }
    const std::string& other(const std::string& x) const { return a == x ? b : a; }
    friend auto operator<=>(const Point&, const Point&) = default;
};

struct Config {
    int d = 1;
    HodgePoly ambient;
    /// Genus and Frobenius trace of the base curve when the ambient surface is
    /// ruled over a curve of positive genus; only used for point counts.
    int base_genus = 0;
    Integer base_trace = 0;
    std::vector<Curve> curves;
    std::vector<Point> points;  // kept sorted

    const Curve* find(const std::string& id) const {
        for (const auto& c : curves) if (c.id == id) return &c;
        return nullptr;
    }
    Curve* find(const std::string& id) {
        for (auto& c : curves) if (c.id == id) return &c;
        return nullptr;
    }
    const Curve& curve(const std::string& id) const {
        if (auto* c = find(id)) return *c;
        throw data_error("unknown curve id '" + id + "'");
    }
    Curve& curve(const std::string& id) {
        if (auto* c = find(id)) return *c;
        throw data_error("unknown curve id '" + id + "'");
    }

    void add_point(const std::string& x, const std::string& y) {
        Point p(x, y);
        points.insert(std::upper_bound(points.begin(), points.end(), p), p);
    }
    /// Removes the occurrence-th point joining x and y (stored order).
    void remove_point(const std::string& x, const std::string& y, int occurrence = 0) {
        Point p(x, y);
        int seen = 0;
        for (auto it = points.begin(); it != points.end(); ++it) {
            if (*it == p && seen++ == occurrence) {
                points.erase(it);
                return;
            }
        }
        throw data_error("no intersection point " + x + "/" + y + "#" + std::to_string(occurrence));
    }
    /// C_x . C_y for x != y.
    int meet_count(const std::string& x, const std::string& y) const {
        Point p(x, y);
        return static_cast<int>(std::count(points.begin(), points.end(), p));
    }
    /// Number of stored intersection points lying on x.
    int points_on(const std::string& x) const {
        return static_cast<int>(std::count_if(points.begin(), points.end(), [&](const Point& p) { return p.joins(x); }));
    }
    /// T_x: ids of the curves meeting x (as a set).
    std::vector<std::string> neighbors(const std::string& x) const {
        std::set<std::string> out;
        for (const auto& p : points) if (p.joins(x)) out.insert(p.other(x));
        return {out.begin(), out.end()};
    }
    /// Curves sorted by id; used for deterministic output.
    void sort_curves() {
        std::sort(curves.begin(), curves.end(), [](const Curve& l, const Curve& r) { return l.id < r.id; });
        std::sort(points.begin(), points.end());
    }

    friend bool operator==(const Config& l, const Config& r) {
        auto key = [](const Config& c) {
            Config s = c;
            s.sort_curves();
            return s;
        };
        Config a = key(l), b = key(r);
        if (a.d != b.d || !(a.ambient == b.ambient) || a.base_genus != b.base_genus || a.base_trace != b.base_trace ||
            a.points != b.points || a.curves.size() != b.curves.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.curves.size(); ++i) {
            const auto &x = a.curves[i], &y = b.curves[i];
            if (x.id != y.id || x.genus != y.genus || x.self_int != y.self_int || x.alpha != y.alpha || x.trace != y.trace) {
                return false;
            }
        }
        return true;
    }
};

enum class Severity { info, warning, error };

inline const char* severity_name(Severity s) {
    switch (s) {
        case Severity::info: return "info";
        case Severity::warning: return "warning";
        case Severity::error: return "error";
    }
    return "?";
}

struct Finding {
    Severity severity;
    std::string code;
    std::string message;
};

struct Report {
    std::vector<Finding> findings;

    bool ok() const {
        return std::none_of(findings.begin(), findings.end(), [](const Finding& f) { return f.severity == Severity::error; });
    }
    void add(Severity s, std::string code, std::string message) {
        findings.push_back({s, std::move(code), std::move(message)});
    }
    void merge(const Report& o) { findings.insert(findings.end(), o.findings.begin(), o.findings.end()); }
    bool has(const std::string& code) const {
        return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.code == code; });
    }
    std::string str() const {
        std::string out;
        for (const auto& f : findings) out += std::string(severity_name(f.severity)) + " [" + f.code + "] " + f.message + "\n";
        return out;
    }
};

/// alpha_C (C.C) + sum_{l != C} (alpha_l - 1)(C.C_l) - (2 g(C) - 2).
/// Zero iff div w^(1/d) restricts to K_X along C as the adjunction formula demands.
inline Rational adjunction_defect(const Config& c, const std::string& id) {
    const Curve& cur = c.curve(id);
    Rational s = cur.alpha * Rational(cur.self_int);
    for (const auto& p : c.points) {
        if (!p.joins(id)) continue;
        s += c.curve(p.other(id)).alpha - 1;
    }
    return s - Rational(2 * cur.genus - 2);
}

/// chi(X) - sum (2 - 2 g_i) + #points, i.e. chi(X \ D).
inline Integer euler_complement(const Config& c) {
    Integer chi = c.ambient.euler();
    for (const auto& cur : c.curves) chi -= 2 - 2 * cur.genus;
    chi += static_cast<long long>(c.points.size());
    return chi;
}

/// Connectivity of the curve/point incidence graph. The empty divisor is not connected.
inline bool is_connected(const Config& c) {
    if (c.curves.empty()) return false;
    std::set<std::string> seen{c.curves.front().id};
    std::vector<std::string> stack{c.curves.front().id};
    while (!stack.empty()) {
        std::string x = stack.back();
        stack.pop_back();
        for (const auto& n : c.neighbors(x)) {
            if (seen.insert(n).second) stack.push_back(n);
        }
    }
    return seen.size() == c.curves.size();
}

/// Hodge class of the stratum C_I^o (|I| <= 2); I = {} is X \ D.
inline HodgePoly stratum_class(const Config& c, const std::vector<std::string>& ids) {
    if (ids.size() >= 3) throw data_error("strata with three or more curves are empty on an SNC surface divisor");
    if (ids.empty()) {
        HodgePoly h = c.ambient;
        for (const auto& cur : c.curves) h -= HodgePoly::curve(cur.genus);
        return h + HodgePoly(Integer(static_cast<long long>(c.points.size())));
    }
    if (ids.size() == 1) {
        const Curve& cur = c.curve(ids[0]);
        return HodgePoly::curve(cur.genus) - HodgePoly(Integer(c.points_on(cur.id)));
    }
    if (ids[0] == ids[1]) throw data_error("stratum indices must be distinct");
    c.curve(ids[0]);
    c.curve(ids[1]);
    return HodgePoly(Integer(c.meet_count(ids[0], ids[1])));
}

/// The allowedness conditions on curves with alpha = 0: (1) rational,
/// (2) no neighbour with alpha = 0, (3) at most two incident points on curves
/// with alpha != 1.
inline Report is_allowed(const Config& c) {
    Report r;
    for (const auto& cur : c.curves) {
        if (cur.alpha != 0) continue;
        if (cur.genus != 0) {
            r.add(Severity::error, "allowed-rational",
                  "curve " + cur.id + " has alpha = 0 but genus " + std::to_string(cur.genus) + " (must be rational)");
        }
        int non_unit = 0;
        std::set<std::string> bad;
        for (const auto& p : c.points) {
            if (!p.joins(cur.id)) continue;
            const Curve* other = c.find(p.other(cur.id));
            if (!other) continue;
            if (other->alpha == 0) bad.insert(other->id);
            if (other->alpha != 1) ++non_unit;
        }
        for (const auto& b : bad) {
            r.add(Severity::error, "allowed-neighbor", "alpha = 0 curves " + cur.id + " and " + b + " intersect");
        }
        if (non_unit > 2) {
            r.add(Severity::error, "allowed-points",
                  "curve " + cur.id + " (alpha = 0) has " + std::to_string(non_unit) +
                      " intersection points with curves of alpha != 1 (at most 2 allowed)");
        }
    }
    return r;
}

/// Structural checks, adjunction on every curve, allowedness, plus
/// informational chi(X \ D) and connectivity findings.
inline Report validate(const Config& c) {
    Report r;
    if (c.d < 1) r.add(Severity::error, "bad-d", "d must be a positive integer");
    if (!c.ambient.is_symmetric()) r.add(Severity::warning, "ambient-asymmetric", "ambient Hodge polynomial is not symmetric in u, v");
    std::set<std::string> ids;
    for (const auto& cur : c.curves) {
        if (cur.id.empty()) r.add(Severity::error, "empty-id", "curve with empty id");
        if (!ids.insert(cur.id).second) r.add(Severity::error, "duplicate-id", "duplicate curve id '" + cur.id + "'");
        if (cur.genus < 0) r.add(Severity::error, "negative-genus", "curve " + cur.id + " has negative genus");
        if (c.d >= 1 && !is_integral(cur.alpha * c.d)) {
            r.add(Severity::error, "alpha-denominator",
                  "alpha of " + cur.id + " is " + to_string(cur.alpha) + ", not a multiple of 1/" + std::to_string(c.d));
        }
    }
    for (const auto& p : c.points) {
        if (p.a == p.b) r.add(Severity::error, "self-point", "point joins curve " + p.a + " to itself");
        for (const auto* id : {&p.a, &p.b}) {
            if (!ids.count(*id)) r.add(Severity::error, "unknown-curve", "point references unknown curve '" + *id + "'");
        }
    }
    if (!r.ok()) return r;

    for (const auto& cur : c.curves) {
        Rational def = adjunction_defect(c, cur.id);
        if (def != 0) r.add(Severity::error, "adjunction", "adjunction defect " + to_string(def) + " on " + cur.id);
    }
    r.merge(is_allowed(c));
    r.add(Severity::info, "euler-complement", "chi(X \\ D) = " + euler_complement(c).str());
    if (c.curves.empty()) r.add(Severity::warning, "empty-divisor", "divisor is empty");
    else r.add(Severity::info, is_connected(c) ? "connected" : "disconnected", is_connected(c) ? "D is connected" : "D is not connected");
    return r;
}

}  // namespace pvcalc
