#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "illum/classify.hpp"
#include "illum/fan.hpp"
#include "illum/illuminate.hpp"
#include "illum/oracle.hpp"
#include "illum/polytope.hpp"
#include "illum/skeleton.hpp"

namespace illum {

using Json = nlohmann::json;

inline Json to_json(const QVector& v) {
    Json a = Json::array();
    for (const auto& e : v) a.push_back(to_string(e));
    return a;
}

inline Json to_json(std::span<const QVector> vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

namespace detail {

inline QVector vector_from_json(const Json& j, std::string_view what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rational strings");
    QVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw InputError(std::string(what) + " entries must be strings like \"p/q\"");
        v[i] = parse_rational(j[i].get<std::string>());
    }
    return v;
}

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace detail

/// {"dim": n, "facets": [{"normal": ["p/q", ...], "offset": "p/q"}, ...]}
inline HPolytope parse_polytope(std::string_view text) {
    const Json doc = detail::parse_json(text);
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("facets")) {
        throw InputError("polytope document needs \"dim\" and \"facets\"");
    }
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0) {
        throw InputError("\"dim\" must be a positive integer");
    }
    const auto dim = doc["dim"].get<std::size_t>();
    const Json& facets = doc["facets"];
    if (!facets.is_array() || facets.empty()) throw InputError("\"facets\" must be a nonempty array");

    std::vector<QVector> normals;
    std::vector<Rational> offsets;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const std::string where = "facet " + std::to_string(i);
        try {
            const Json& f = facets[i];
            if (!f.is_object() || !f.contains("normal") || !f.contains("offset") || !f["offset"].is_string()) {
                throw InputError("needs \"normal\" and string \"offset\"");
            }
            QVector n = detail::vector_from_json(f["normal"], "normal");
            if (n.dim() != dim) {
                throw InputError("dimension mismatch: normal has " + std::to_string(n.dim()) + " entries, dim is " +
                                 std::to_string(dim));
            }
            normals.push_back(std::move(n));
            offsets.push_back(parse_rational(f["offset"].get<std::string>()));
        } catch (const InputError& e) {
            if (e.facet()) throw;
            throw InputError(where + ": " + e.what(), i);
        }
    }
    return HPolytope::make(std::move(normals), std::move(offsets));
}

/// Facets in canonical order; rationals as exact strings.
inline Json polytope_to_json(const HPolytope& p) {
    Json facets = Json::array();
    for (std::size_t i = 0; i < p.normal_set().size(); ++i) {
        facets.push_back({{"normal", to_json(p.normal_set()[i])}, {"offset", to_string(p.offset(i))}});
    }
    return {{"dim", p.dim()}, {"facets", facets}};
}

inline std::string serialize_polytope(const HPolytope& p) { return polytope_to_json(p).dump(); }

inline Json to_json(const Certificate& c) {
    Json j = {{"normals", to_json(std::span<const QVector>(c.subset))}};
    if (!c.second.empty()) j["second"] = to_json(std::span<const QVector>(c.second));
    if (c.separator) j["separator"] = to_json(*c.separator);
    if (c.common_point) j["common_point"] = to_json(*c.common_point);
    return j;
}

inline Json to_json(const Skeleton& s) {
    Json parts = Json::array();
    for (const auto& p : s.parts) parts.push_back(to_json(std::span<const QVector>(p)));
    return {{"basis", to_json(std::span<const QVector>(s.basis))},
            {"parts", parts},
            {"part_supports", s.part_supports},
            {"product", s.product()}};
}

inline Json to_json(const IlluminationSet& set) {
    Json assignment = Json::array();
    for (const auto& a : set.assignment) {
        Json entry = {{"vertex", to_json(a.vertex)}};
        entry["direction"] = a.direction ? Json(*a.direction) : Json(nullptr);
        assignment.push_back(entry);
    }
    Json cones = Json::array();
    for (const auto& c : set.cones) cones.push_back(to_json(std::span<const QVector>(c)));
    Json j = {{"q", set.directions.size()},
              {"directions", to_json(std::span<const QVector>(set.directions))},
              {"epsilon", to_string(set.epsilon)},
              {"scaled", to_json(std::span<const QVector>(set.scaled))},
              {"assignment", assignment},
              {"cones", cones}};
    if (set.delta) j["delta"] = to_string(*set.delta);
    return j;
}

inline Json to_json(const IlluminationReport& r) {
    Json vs = Json::array();
    for (const auto& v : r.vertices) {
        Json e = {{"vertex", to_json(v.vertex)}, {"directional", v.directional}, {"interior", v.interior}};
        e["direction"] = v.direction ? Json(*v.direction) : Json(nullptr);
        if (v.blocking_normal) e["blocking_normal"] = to_json(*v.blocking_normal);
        vs.push_back(e);
    }
    return {{"passed", r.passed}, {"vertices", vs}};
}

inline Json to_json(const FanCone& c) {
    Json j = {{"generators", to_json(std::span<const QVector>(c.generators))}};
    if (c.associated_vertex) j["vertex"] = to_json(c.associated_vertex->point);
    return j;
}

/// {"epsilon": "p/q", "directions": [[...], ...]}; the directions are unscaled.
inline IlluminationSet parse_directions(std::string_view text, std::size_t dim) {
    const Json doc = detail::parse_json(text);
    if (!doc.is_object() || !doc.contains("epsilon") || !doc.contains("directions") || !doc["epsilon"].is_string() ||
        !doc["directions"].is_array()) {
        throw InputError("directions document needs string \"epsilon\" and array \"directions\"");
    }
    IlluminationSet set;
    set.epsilon = parse_rational(doc["epsilon"].get<std::string>());
    if (set.epsilon <= 0) throw InputError("epsilon must be positive");
    for (const auto& d : doc["directions"]) {
        QVector v = detail::vector_from_json(d, "direction");
        if (v.dim() != dim) throw InputError("direction dimension does not match the polytope");
        set.scaled.push_back(set.epsilon * v);
        set.directions.push_back(std::move(v));
    }
    return set;
}

inline Json directions_to_json(const IlluminationSet& set) {
    return {{"epsilon", to_string(set.epsilon)}, {"directions", to_json(std::span<const QVector>(set.directions))}};
}

}  // namespace illum
