#pragma once

/**
 * @file io.hpp
 * @brief JSON reading and writing of configurations and resolution data.
 *
 * Configuration:
 *   {"d": 2,
 *    "ambient": {"kind": "plane" | "ruled" | "custom", "base_genus": 0,
 *                "base_trace": 0, "blowups": 0, "hodge": [[a, b, c], ...]},
 *    "curves": [{"id": "C1", "genus": 0, "self": -2, "alpha": "1/2", "trace": 0}],
 *    "points": [["C1", "C2"], ...]}
 *
 * Resolution datum:
 *   {"nj": 2, "vj": 1, "surface": <ambient>, "creation": "point",
 *    "creation_genus": 1,
 *    "components": [{"id": "D1", "genus": 0, "self": 1, "N": 1, "v": 1}],
 *    "points": [["D1", "D2"], ...]}
 *
 * Every parse problem is reported as parse_error with a JSON path.
 */

#include "surface.hpp"
#include "zeta.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace pvcalc {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw parse_error(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw parse_error(path + "." + key + ": missing");
    return *it;
}

inline std::int64_t as_int(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) throw parse_error(path + ": expected an integer");
    return v.get<std::int64_t>();
}

inline std::int64_t int_or(const Json& obj, const std::string& key, std::int64_t fallback, const std::string& path) {
    auto it = obj.find(key);
    return it == obj.end() ? fallback : as_int(*it, path + "." + key);
}

inline std::string as_string(const Json& v, const std::string& path) {
    if (!v.is_string()) throw parse_error(path + ": expected a string");
    return v.get<std::string>();
}

inline Rational as_rational(const Json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) throw parse_error(path + ": expected an exact rational string such as \"1/2\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

struct Ambient {
    HodgePoly hodge;
    int base_genus = 0;
    Integer base_trace = 0;
};

inline Ambient read_ambient(const Json& a, const std::string& path) {
    if (!a.is_object()) throw parse_error(path + ": expected an object");
    std::string kind = as_string(field(a, "kind", path), path + ".kind");
    Ambient out;
    out.base_genus = static_cast<int>(int_or(a, "base_genus", 0, path));
    out.base_trace = int_or(a, "base_trace", 0, path);
    if (out.base_genus < 0) throw parse_error(path + ".base_genus: must be >= 0");
    if (kind == "plane") {
        out.hodge = HodgePoly::plane();
    } else if (kind == "ruled") {
        out.hodge = HodgePoly::ruled(out.base_genus);
    } else if (kind == "custom") {
        const Json& h = field(a, "hodge", path);
        if (!h.is_array()) throw parse_error(path + ".hodge: expected an array of [u-exp, v-exp, coeff]");
        for (std::size_t i = 0; i < h.size(); ++i) {
            std::string p = path + ".hodge[" + std::to_string(i) + "]";
            if (!h[i].is_array() || h[i].size() != 3) throw parse_error(p + ": expected [u-exp, v-exp, coeff]");
            std::int64_t ua = as_int(h[i][0], p + "[0]"), vb = as_int(h[i][1], p + "[1]"), c = as_int(h[i][2], p + "[2]");
            if (ua < 0 || vb < 0) throw parse_error(p + ": exponents must be >= 0");
            out.hodge.add_term(static_cast<int>(ua), static_cast<int>(vb), c);
        }
        return out;
    } else {
        throw parse_error(path + ".kind: unknown kind '" + kind + "' (plane, ruled or custom)");
    }
    std::int64_t blowups = int_or(a, "blowups", 0, path);
    if (blowups < 0) throw parse_error(path + ".blowups: must be >= 0");
    out.hodge += HodgePoly::uv_power(1) * HodgePoly(Integer(blowups));
    return out;
}

inline Json write_ambient(const HodgePoly& h, int base_genus, const Integer& base_trace) {
    Json terms = Json::array();
    for (const auto& [m, c] : h.terms()) terms.push_back({m.first, m.second, static_cast<std::int64_t>(c)});
    Json a = {{"kind", "custom"}, {"hodge", terms}};
    if (base_genus != 0) a["base_genus"] = base_genus;
    if (base_trace != 0) a["base_trace"] = static_cast<std::int64_t>(base_trace);
    return a;
}

inline std::vector<Point> read_points(const Json& obj, const std::string& path) {
    std::vector<Point> out;
    auto it = obj.find("points");
    if (it == obj.end()) return out;
    if (!it->is_array()) throw parse_error(path + ".points: expected an array of id pairs");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const Json& p = (*it)[i];
        std::string pp = path + ".points[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 2) throw parse_error(pp + ": expected a pair of curve ids");
        out.emplace_back(as_string(p[0], pp + "[0]"), as_string(p[1], pp + "[1]"));
    }
    return out;
}

inline Json write_points(const std::vector<Point>& points) {
    Json out = Json::array();
    for (const auto& p : points) out.push_back({p.a, p.b});
    return out;
}

inline Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace detail

/// d comes from the document, else from default_d; 0 means "required".
inline Config config_from_json(const Json& j, int default_d = 0) {
    const std::string root = "$";
    if (!j.is_object()) throw parse_error("$: expected an object");
    Config c;
    auto dit = j.find("d");
    if (dit != j.end()) c.d = static_cast<int>(detail::as_int(*dit, "$.d"));
    else if (default_d > 0) c.d = default_d;
    else throw parse_error("$.d: missing (and no default d given)");
    if (c.d < 1) throw parse_error("$.d: must be a positive integer");
    auto amb = detail::read_ambient(detail::field(j, "ambient", root), "$.ambient");
    c.ambient = amb.hodge;
    c.base_genus = amb.base_genus;
    c.base_trace = amb.base_trace;
    const Json& curves = detail::field(j, "curves", root);
    if (!curves.is_array()) throw parse_error("$.curves: expected an array");
    for (std::size_t i = 0; i < curves.size(); ++i) {
        std::string p = "$.curves[" + std::to_string(i) + "]";
        const Json& cj = curves[i];
        Curve cur;
        cur.id = detail::as_string(detail::field(cj, "id", p), p + ".id");
        cur.genus = static_cast<int>(detail::int_or(cj, "genus", 0, p));
        cur.self_int = detail::as_int(detail::field(cj, "self", p), p + ".self");
        cur.alpha = detail::as_rational(detail::field(cj, "alpha", p), p + ".alpha");
        cur.trace = detail::int_or(cj, "trace", 0, p);
        c.curves.push_back(std::move(cur));
    }
    for (auto& pt : detail::read_points(j, root)) c.add_point(pt.a, pt.b);
    return c;
}

/// Curves sorted by id, ambient written as an explicit Hodge polynomial.
inline Json config_to_json(Config c) {
    c.sort_curves();
    Json curves = Json::array();
    for (const auto& cur : c.curves) {
        Json cj = {{"id", cur.id}, {"genus", cur.genus}, {"self", cur.self_int}, {"alpha", to_string(cur.alpha)}};
        if (cur.trace != 0) cj["trace"] = static_cast<std::int64_t>(cur.trace);
        curves.push_back(cj);
    }
    return Json{{"d", c.d},
                {"ambient", detail::write_ambient(c.ambient, c.base_genus, c.base_trace)},
                {"curves", curves},
                {"points", detail::write_points(c.points)}};
}

inline SurfaceResolutionDatum datum_from_json(const Json& j) {
    const std::string root = "$";
    if (!j.is_object()) throw parse_error("$: expected an object");
    SurfaceResolutionDatum z;
    z.nj = detail::as_int(detail::field(j, "nj", root), "$.nj");
    z.vj = detail::as_int(detail::field(j, "vj", root), "$.vj");
    if (z.nj < 1 || z.vj < 1) throw parse_error("$.nj, $.vj: must be positive");
    auto amb = detail::read_ambient(detail::field(j, "surface", root), "$.surface");
    z.surface = amb.hodge;
    z.base_genus = amb.base_genus;
    z.base_trace = amb.base_trace;
    std::string creation = "point";
    if (auto it = j.find("creation"); it != j.end()) creation = detail::as_string(*it, "$.creation");
    if (creation == "point") z.creation = Creation::point;
    else if (creation == "rational_curve") z.creation = Creation::rational_curve;
    else if (creation == "nonrational_curve") z.creation = Creation::nonrational_curve;
    else throw parse_error("$.creation: unknown value '" + creation + "' (point, rational_curve or nonrational_curve)");
    z.creation_genus = static_cast<int>(detail::int_or(j, "creation_genus", z.creation == Creation::nonrational_curve ? 1 : 0, root));
    const Json& comps = detail::field(j, "components", root);
    if (!comps.is_array()) throw parse_error("$.components: expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::string p = "$.components[" + std::to_string(i) + "]";
        const Json& cj = comps[i];
        Component comp;
        comp.id = detail::as_string(detail::field(cj, "id", p), p + ".id");
        comp.genus = static_cast<int>(detail::int_or(cj, "genus", 0, p));
        comp.self_int = detail::as_int(detail::field(cj, "self", p), p + ".self");
        comp.N = detail::as_int(detail::field(cj, "N", p), p + ".N");
        comp.nu = detail::as_int(detail::field(cj, "v", p), p + ".v");
        comp.trace = detail::int_or(cj, "trace", 0, p);
        z.components.push_back(std::move(comp));
    }
    z.points = detail::read_points(j, root);
    std::sort(z.points.begin(), z.points.end());
    return z;
}

inline Json datum_to_json(const SurfaceResolutionDatum& z) {
    Json comps = Json::array();
    auto sorted = z.components;
    std::sort(sorted.begin(), sorted.end(), [](const Component& a, const Component& b) { return a.id < b.id; });
    for (const auto& c : sorted) {
        Json cj = {{"id", c.id}, {"genus", c.genus}, {"self", c.self_int}, {"N", c.N}, {"v", c.nu}};
        if (c.trace != 0) cj["trace"] = static_cast<std::int64_t>(c.trace);
        comps.push_back(cj);
    }
    Json j = {{"nj", z.nj},
              {"vj", z.vj},
              {"surface", detail::write_ambient(z.surface, z.base_genus, z.base_trace)},
              {"creation", creation_name(z.creation)},
              {"components", comps},
              {"points", detail::write_points(z.points)}};
    if (z.creation == Creation::nonrational_curve) j["creation_genus"] = z.creation_genus;
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Config load_config(const std::string& path, int default_d = 0) {
    return config_from_json(detail::parse_text(read_file(path)), default_d);
}

inline SurfaceResolutionDatum load_datum(const std::string& path) {
    return datum_from_json(detail::parse_text(read_file(path)));
}

inline void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace pvcalc
